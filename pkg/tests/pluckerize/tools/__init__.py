"""Test package for pluckerize.tools."""
