"""File adapters: CSV datasets, JSON reports and models."""
