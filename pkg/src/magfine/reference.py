"""Published integer sequences the computations are checked against."""

# F_{n-1} for n = 1..12
FINE = (1, 0, 1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724)

# (1/(n-1)!) dim Sabinin(n), n = 1..10
LOG_CATALAN = (1, 1, 4, 13, 46, 166, 610, 2269, 8518, 32206)

# dim of MagFine modulo the pre-Lie relation, n = 1..5
PRELIE_QUOTIENT = (1, 0, 3, 16, 165)
