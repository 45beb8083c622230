"""Projects package initialization."""
