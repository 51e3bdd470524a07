"""
Table and semigroup recipes, one class per construction.
"""
