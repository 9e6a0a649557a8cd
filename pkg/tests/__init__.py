"""
Tests package.
"""

