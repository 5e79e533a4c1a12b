"""Edge augmentation on disconnected graphs via Laplacian eigenvalue elevation."""

__version__ = "0.1.0"
