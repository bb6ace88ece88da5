"""Divisibility, factorization and published-constant checks"""
