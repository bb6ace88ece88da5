"""Permanent-based Latin square counts"""
