"""Latin Rectangle Census: exact counts of Latin rectangles and squares"""

__version__ = "0.1.0"
