"""Balanced bipartite graphs, canonical forms and 1-factorizations"""
