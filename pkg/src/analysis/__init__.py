"""
Distribution of the first-arrival parameter J for k = 1
"""
