"""
Path objects, exhaustive oracles and bijections
"""
