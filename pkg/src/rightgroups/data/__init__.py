"""Shipped certificate fixtures."""
