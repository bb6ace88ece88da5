"""Latin rectangles, paratopisms and exhaustive enumeration"""
