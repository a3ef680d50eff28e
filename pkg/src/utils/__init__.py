"""
Rendering helpers
"""
