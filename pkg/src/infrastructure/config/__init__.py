"""JSON configuration loading."""
