"""Test package for pluckerize."""
