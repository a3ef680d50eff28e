"""
Exact power series, closed forms and strip generating functions
"""
