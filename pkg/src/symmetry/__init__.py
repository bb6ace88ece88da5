"""Autoparatopism census and symmetry bounds"""
