"""Graph-class generation and the class-summation counts"""
