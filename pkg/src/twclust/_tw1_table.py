"""Embedded TW1 CDF table.  Generated by tools/gen_tw1_table.py.

Values are F1(s) from a Gauss-Legendre Nystrom evaluation of the
Fredholm determinant det(I - Ai(x + y + s)) on L^2(0, inf)
(160 nodes, truncation 26.0), with analytic tail
expansions outside the 1e-8 crossovers.  Do not edit by hand.
"""

GRID = [
    -13.0,
    -12.98,
    -12.96,
    -12.94,
    -12.92,
    -12.9,
    -12.88,
    -12.86,
    -12.84,
    -12.82,
    -12.8,
    -12.78,
    -12.76,
    -12.74,
    -12.72,
    -12.7,
    -12.68,
    -12.66,
    -12.64,
    -12.62,
    -12.6,
    -12.58,
    -12.56,
    -12.54,
    -12.52,
    -12.5,
    -12.48,
    -12.46,
    -12.44,
    -12.42,
    -12.4,
    -12.38,
    -12.36,
    -12.34,
    -12.32,
    -12.3,
    -12.28,
    -12.26,
    -12.24,
    -12.22,
    -12.2,
    -12.18,
    -12.16,
    -12.14,
    -12.12,
    -12.1,
    -12.08,
    -12.06,
    -12.04,
    -12.02,
    -12.0,
    -11.98,
    -11.96,
    -11.94,
    -11.92,
    -11.9,
    -11.88,
    -11.86,
    -11.84,
    -11.82,
    -11.8,
    -11.78,
    -11.76,
    -11.74,
    -11.72,
    -11.7,
    -11.68,
    -11.66,
    -11.64,
    -11.62,
    -11.6,
    -11.58,
    -11.56,
    -11.54,
    -11.52,
    -11.5,
    -11.48,
    -11.46,
    -11.44,
    -11.42,
    -11.4,
    -11.38,
    -11.36,
    -11.34,
    -11.32,
    -11.3,
    -11.28,
    -11.26,
    -11.24,
    -11.22,
    -11.2,
    -11.18,
    -11.16,
    -11.14,
    -11.12,
    -11.1,
    -11.08,
    -11.06,
    -11.04,
    -11.02,
    -11.0,
    -10.98,
    -10.96,
    -10.94,
    -10.92,
    -10.9,
    -10.88,
    -10.86,
    -10.84,
    -10.82,
    -10.8,
    -10.78,
    -10.76,
    -10.74,
    -10.72,
    -10.7,
    -10.68,
    -10.66,
    -10.64,
    -10.62,
    -10.6,
    -10.58,
    -10.56,
    -10.54,
    -10.52,
    -10.5,
    -10.48,
    -10.46,
    -10.44,
    -10.42,
    -10.4,
    -10.38,
    -10.36,
    -10.34,
    -10.32,
    -10.3,
    -10.28,
    -10.26,
    -10.24,
    -10.22,
    -10.2,
    -10.18,
    -10.16,
    -10.14,
    -10.12,
    -10.1,
    -10.08,
    -10.06,
    -10.04,
    -10.02,
    -10.0,
    -9.98,
    -9.96,
    -9.94,
    -9.92,
    -9.9,
    -9.88,
    -9.86,
    -9.84,
    -9.82,
    -9.8,
    -9.78,
    -9.76,
    -9.74,
    -9.72,
    -9.7,
    -9.68,
    -9.66,
    -9.64,
    -9.62,
    -9.6,
    -9.58,
    -9.56,
    -9.54,
    -9.52,
    -9.5,
    -9.48,
    -9.46,
    -9.44,
    -9.42,
    -9.4,
    -9.38,
    -9.36,
    -9.34,
    -9.32,
    -9.3,
    -9.28,
    -9.26,
    -9.24,
    -9.22,
    -9.2,
    -9.18,
    -9.16,
    -9.14,
    -9.12,
    -9.1,
    -9.08,
    -9.06,
    -9.04,
    -9.02,
    -9.0,
    -8.98,
    -8.96,
    -8.94,
    -8.92,
    -8.9,
    -8.88,
    -8.86,
    -8.84,
    -8.82,
    -8.8,
    -8.78,
    -8.76,
    -8.74,
    -8.72,
    -8.7,
    -8.68,
    -8.66,
    -8.64,
    -8.62,
    -8.6,
    -8.58,
    -8.56,
    -8.54,
    -8.52,
    -8.5,
    -8.48,
    -8.46,
    -8.44,
    -8.42,
    -8.4,
    -8.38,
    -8.36,
    -8.34,
    -8.32,
    -8.3,
    -8.28,
    -8.26,
    -8.24,
    -8.22,
    -8.2,
    -8.18,
    -8.16,
    -8.14,
    -8.12,
    -8.1,
    -8.08,
    -8.06,
    -8.04,
    -8.02,
    -8.0,
    -7.98,
    -7.96,
    -7.94,
    -7.92,
    -7.9,
    -7.88,
    -7.86,
    -7.84,
    -7.82,
    -7.8,
    -7.78,
    -7.76,
    -7.74,
    -7.72,
    -7.7,
    -7.68,
    -7.66,
    -7.64,
    -7.62,
    -7.6,
    -7.58,
    -7.56,
    -7.54,
    -7.52,
    -7.5,
    -7.48,
    -7.46,
    -7.44,
    -7.42,
    -7.4,
    -7.38,
    -7.36,
    -7.34,
    -7.32,
    -7.3,
    -7.28,
    -7.26,
    -7.24,
    -7.22,
    -7.2,
    -7.18,
    -7.16,
    -7.14,
    -7.12,
    -7.1,
    -7.08,
    -7.06,
    -7.04,
    -7.02,
    -7.0,
    -6.98,
    -6.96,
    -6.94,
    -6.92,
    -6.9,
    -6.88,
    -6.86,
    -6.84,
    -6.82,
    -6.8,
    -6.78,
    -6.76,
    -6.74,
    -6.72,
    -6.7,
    -6.68,
    -6.66,
    -6.64,
    -6.62,
    -6.6,
    -6.58,
    -6.56,
    -6.54,
    -6.52,
    -6.5,
    -6.48,
    -6.46,
    -6.44,
    -6.42,
    -6.4,
    -6.38,
    -6.36,
    -6.34,
    -6.32,
    -6.3,
    -6.28,
    -6.26,
    -6.24,
    -6.22,
    -6.2,
    -6.18,
    -6.16,
    -6.14,
    -6.12,
    -6.1,
    -6.08,
    -6.06,
    -6.04,
    -6.02,
    -6.0,
    -5.98,
    -5.96,
    -5.94,
    -5.92,
    -5.9,
    -5.88,
    -5.86,
    -5.84,
    -5.82,
    -5.8,
    -5.78,
    -5.76,
    -5.74,
    -5.72,
    -5.7,
    -5.68,
    -5.66,
    -5.64,
    -5.62,
    -5.6,
    -5.58,
    -5.56,
    -5.54,
    -5.52,
    -5.5,
    -5.48,
    -5.46,
    -5.44,
    -5.42,
    -5.4,
    -5.38,
    -5.36,
    -5.34,
    -5.32,
    -5.3,
    -5.28,
    -5.26,
    -5.24,
    -5.22,
    -5.2,
    -5.18,
    -5.16,
    -5.14,
    -5.12,
    -5.1,
    -5.08,
    -5.06,
    -5.04,
    -5.02,
    -5.0,
    -4.98,
    -4.96,
    -4.94,
    -4.92,
    -4.9,
    -4.88,
    -4.86,
    -4.84,
    -4.82,
    -4.8,
    -4.78,
    -4.76,
    -4.74,
    -4.72,
    -4.7,
    -4.68,
    -4.66,
    -4.64,
    -4.62,
    -4.6,
    -4.58,
    -4.56,
    -4.54,
    -4.52,
    -4.5,
    -4.48,
    -4.46,
    -4.44,
    -4.42,
    -4.4,
    -4.38,
    -4.36,
    -4.34,
    -4.32,
    -4.3,
    -4.28,
    -4.26,
    -4.24,
    -4.22,
    -4.2,
    -4.18,
    -4.16,
    -4.14,
    -4.12,
    -4.1,
    -4.08,
    -4.06,
    -4.04,
    -4.02,
    -4.0,
    -3.98,
    -3.96,
    -3.94,
    -3.92,
    -3.9,
    -3.88,
    -3.86,
    -3.84,
    -3.82,
    -3.8,
    -3.78,
    -3.76,
    -3.74,
    -3.72,
    -3.7,
    -3.68,
    -3.66,
    -3.64,
    -3.62,
    -3.6,
    -3.58,
    -3.56,
    -3.54,
    -3.52,
    -3.5,
    -3.48,
    -3.46,
    -3.44,
    -3.42,
    -3.4,
    -3.38,
    -3.36,
    -3.34,
    -3.32,
    -3.3,
    -3.28,
    -3.26,
    -3.24,
    -3.22,
    -3.2,
    -3.18,
    -3.16,
    -3.14,
    -3.12,
    -3.1,
    -3.08,
    -3.06,
    -3.04,
    -3.02,
    -3.0,
    -2.98,
    -2.96,
    -2.94,
    -2.92,
    -2.9,
    -2.88,
    -2.86,
    -2.84,
    -2.82,
    -2.8,
    -2.78,
    -2.76,
    -2.74,
    -2.72,
    -2.7,
    -2.68,
    -2.66,
    -2.64,
    -2.62,
    -2.6,
    -2.58,
    -2.56,
    -2.54,
    -2.52,
    -2.5,
    -2.48,
    -2.46,
    -2.44,
    -2.42,
    -2.4,
    -2.38,
    -2.36,
    -2.34,
    -2.32,
    -2.3,
    -2.28,
    -2.26,
    -2.24,
    -2.22,
    -2.2,
    -2.18,
    -2.16,
    -2.14,
    -2.12,
    -2.1,
    -2.08,
    -2.06,
    -2.04,
    -2.02,
    -2.0,
    -1.98,
    -1.96,
    -1.94,
    -1.92,
    -1.9,
    -1.88,
    -1.86,
    -1.84,
    -1.82,
    -1.8,
    -1.78,
    -1.76,
    -1.74,
    -1.72,
    -1.7,
    -1.68,
    -1.66,
    -1.64,
    -1.62,
    -1.6,
    -1.58,
    -1.56,
    -1.54,
    -1.52,
    -1.5,
    -1.48,
    -1.46,
    -1.44,
    -1.42,
    -1.4,
    -1.38,
    -1.36,
    -1.34,
    -1.32,
    -1.3,
    -1.28,
    -1.26,
    -1.24,
    -1.22,
    -1.2,
    -1.18,
    -1.16,
    -1.14,
    -1.12,
    -1.1,
    -1.08,
    -1.06,
    -1.04,
    -1.02,
    -1.0,
    -0.98,
    -0.96,
    -0.94,
    -0.92,
    -0.9,
    -0.88,
    -0.86,
    -0.84,
    -0.82,
    -0.8,
    -0.78,
    -0.76,
    -0.74,
    -0.72,
    -0.7,
    -0.68,
    -0.66,
    -0.64,
    -0.62,
    -0.6,
    -0.58,
    -0.56,
    -0.54,
    -0.52,
    -0.5,
    -0.48,
    -0.46,
    -0.44,
    -0.42,
    -0.4,
    -0.38,
    -0.36,
    -0.34,
    -0.32,
    -0.3,
    -0.28,
    -0.26,
    -0.24,
    -0.22,
    -0.2,
    -0.18,
    -0.16,
    -0.14,
    -0.12,
    -0.1,
    -0.08,
    -0.06,
    -0.04,
    -0.02,
    -0.0,
    0.02,
    0.04,
    0.06,
    0.08,
    0.1,
    0.12,
    0.14,
    0.16,
    0.18,
    0.2,
    0.22,
    0.24,
    0.26,
    0.28,
    0.3,
    0.32,
    0.34,
    0.36,
    0.38,
    0.4,
    0.42,
    0.44,
    0.46,
    0.48,
    0.5,
    0.52,
    0.54,
    0.56,
    0.58,
    0.6,
    0.62,
    0.64,
    0.66,
    0.68,
    0.7,
    0.72,
    0.74,
    0.76,
    0.78,
    0.8,
    0.82,
    0.84,
    0.86,
    0.88,
    0.9,
    0.92,
    0.94,
    0.96,
    0.98,
    1.0,
    1.02,
    1.04,
    1.06,
    1.08,
    1.1,
    1.12,
    1.14,
    1.16,
    1.18,
    1.2,
    1.22,
    1.24,
    1.26,
    1.28,
    1.3,
    1.32,
    1.34,
    1.36,
    1.38,
    1.4,
    1.42,
    1.44,
    1.46,
    1.48,
    1.5,
    1.52,
    1.54,
    1.56,
    1.58,
    1.6,
    1.62,
    1.64,
    1.66,
    1.68,
    1.7,
    1.72,
    1.74,
    1.76,
    1.78,
    1.8,
    1.82,
    1.84,
    1.86,
    1.88,
    1.9,
    1.92,
    1.94,
    1.96,
    1.98,
    2.0,
    2.02,
    2.04,
    2.06,
    2.08,
    2.1,
    2.12,
    2.14,
    2.16,
    2.18,
    2.2,
    2.22,
    2.24,
    2.26,
    2.28,
    2.3,
    2.32,
    2.34,
    2.36,
    2.38,
    2.4,
    2.42,
    2.44,
    2.46,
    2.48,
    2.5,
    2.52,
    2.54,
    2.56,
    2.58,
    2.6,
    2.62,
    2.64,
    2.66,
    2.68,
    2.7,
    2.72,
    2.74,
    2.76,
    2.78,
    2.8,
    2.82,
    2.84,
    2.86,
    2.88,
    2.9,
    2.92,
    2.94,
    2.96,
    2.98,
    3.0,
    3.02,
    3.04,
    3.06,
    3.08,
    3.1,
    3.12,
    3.14,
    3.16,
    3.18,
    3.2,
    3.22,
    3.24,
    3.26,
    3.28,
    3.3,
    3.32,
    3.34,
    3.36,
    3.38,
    3.4,
    3.42,
    3.44,
    3.46,
    3.48,
    3.5,
    3.52,
    3.54,
    3.56,
    3.58,
    3.6,
    3.62,
    3.64,
    3.66,
    3.68,
    3.7,
    3.72,
    3.74,
    3.76,
    3.78,
    3.8,
    3.82,
    3.84,
    3.86,
    3.88,
    3.9,
    3.92,
    3.94,
    3.96,
    3.98,
    4.0,
    4.02,
    4.04,
    4.06,
    4.08,
    4.1,
    4.12,
    4.14,
    4.16,
    4.18,
    4.2,
    4.22,
    4.24,
    4.26,
    4.28,
    4.3,
    4.32,
    4.34,
    4.36,
    4.38,
    4.4,
    4.42,
    4.44,
    4.46,
    4.48,
    4.5,
    4.52,
    4.54,
    4.56,
    4.58,
    4.6,
    4.62,
    4.64,
    4.66,
    4.68,
    4.7,
    4.72,
    4.74,
    4.76,
    4.78,
    4.8,
    4.82,
    4.84,
    4.86,
    4.88,
    4.9,
    4.92,
    4.94,
    4.96,
    4.98,
    5.0,
    5.02,
    5.04,
    5.06,
    5.08,
    5.1,
    5.12,
    5.14,
    5.16,
    5.18,
    5.2,
    5.22,
    5.24,
    5.26,
    5.28,
    5.3,
    5.32,
    5.34,
    5.36,
    5.38,
    5.4,
    5.42,
    5.44,
    5.46,
    5.48,
    5.5,
    5.52,
    5.54,
    5.56,
    5.58,
    5.6,
    5.62,
    5.64,
    5.66,
    5.68,
    5.7,
    5.72,
    5.74,
    5.76,
    5.78,
    5.8,
    5.82,
    5.84,
    5.86,
    5.88,
    5.9,
    5.92,
    5.94,
    5.96,
    5.98,
    6.0,
    6.02,
    6.04,
    6.06,
    6.08,
    6.1,
    6.12,
    6.14,
    6.16,
    6.18,
    6.2,
    6.22,
    6.24,
    6.26,
    6.28,
    6.3,
    6.32,
    6.34,
    6.36,
    6.38,
    6.4,
    6.42,
    6.44,
    6.46,
    6.48,
    6.5,
    6.52,
    6.54,
    6.56,
    6.58,
    6.6,
    6.62,
    6.64,
    6.66,
    6.68,
    6.7,
    6.72,
    6.74,
    6.76,
    6.78,
    6.8,
    6.82,
    6.84,
    6.86,
    6.88,
    6.9,
    6.92,
    6.94,
    6.96,
    6.98,
    7.0,
    7.02,
    7.04,
    7.06,
    7.08,
    7.1,
    7.12,
    7.14,
    7.16,
    7.18,
    7.2,
    7.22,
    7.24,
    7.26,
    7.28,
    7.3,
    7.32,
    7.34,
    7.36,
    7.38,
    7.4,
    7.42,
    7.44,
    7.46,
    7.48,
    7.5,
    7.52,
    7.54,
    7.56,
    7.58,
    7.6,
    7.62,
    7.64,
    7.66,
    7.68,
    7.7,
    7.72,
    7.74,
    7.76,
    7.78,
    7.8,
    7.82,
    7.84,
    7.86,
    7.88,
    7.9,
    7.92,
    7.94,
    7.96,
    7.98,
    8.0,
    8.02,
    8.04,
    8.06,
    8.08,
    8.1,
    8.12,
    8.14,
    8.16,
    8.18,
    8.2,
    8.22,
    8.24,
    8.26,
    8.28,
    8.3,
    8.32,
    8.34,
    8.36,
    8.38,
    8.4,
    8.42,
    8.44,
    8.46,
    8.48,
    8.5,
    8.52,
    8.54,
    8.56,
    8.58,
    8.6,
    8.62,
    8.64,
    8.66,
    8.68,
    8.7,
    8.72,
    8.74,
    8.76,
    8.78,
    8.8,
    8.82,
    8.84,
    8.86,
    8.88,
    8.9,
    8.92,
    8.94,
    8.96,
    8.98,
    9.0,
    9.02,
    9.04,
    9.06,
    9.08,
    9.1,
    9.12,
    9.14,
    9.16,
    9.18,
    9.2,
    9.22,
    9.24,
    9.26,
    9.28,
    9.3,
    9.32,
    9.34,
    9.36,
    9.38,
    9.4,
    9.42,
    9.44,
    9.46,
    9.48,
    9.5,
    9.52,
    9.54,
    9.56,
    9.58,
    9.6,
    9.62,
    9.64,
    9.66,
    9.68,
    9.7,
    9.72,
    9.74,
    9.76,
    9.78,
    9.8,
    9.82,
    9.84,
    9.86,
    9.88,
    9.9,
    9.92,
    9.94,
    9.96,
    9.98,
    10.0,
]

CDF = [
    1.8651845212630092e-45,
    2.917688921545349e-45,
    4.558101548765751e-45,
    7.111442375050398e-45,
    1.108054048450746e-44,
    1.7242276588874523e-44,
    2.679535685695239e-44,
    4.15869069313793e-44,
    6.445946477811237e-44,
    9.978163856629402e-44,
    1.5425856658863407e-43,
    2.3816806997941005e-43,
    3.672435958366977e-43,
    5.6553857715627475e-43,
    8.697779842673029e-43,
    1.3359605087991788e-42,
    2.0493622235688393e-42,
    3.1396742457189556e-42,
    4.8038791642371e-42,
    7.340777165602009e-42,
    1.1203026189828458e-41,
    1.7075477906749101e-41,
    2.599294283702285e-41,
    3.9516999887401155e-41,
    6.000110816715676e-41,
    9.098760443671924e-41,
    1.3780142409161632e-40,
    2.084368772187933e-40,
    3.1488041519353524e-40,
    4.7508119677317975e-40,
    7.158829137583671e-40,
    1.0773801679348206e-39,
    1.6193832511611082e-39,
    2.4309994330749117e-39,
    3.644814933937533e-39,
    5.457859828884063e-39,
    8.16256038208648e-39,
    1.2192378353427842e-38,
    1.818902048914275e-38,
    2.710128675806871e-38,
    4.0330266408356477e-38,
    5.994234263345346e-38,
    8.898127738257639e-38,
    1.3192488525556696e-37,
    1.9535244026492528e-37,
    2.8891882777700627e-37,
    4.2677463265115115e-37,
    6.296336949575024e-37,
    9.277795551341597e-37,
    1.3654316608848143e-36,
    2.007078390944842e-36,
    2.9466513886008056e-36,
    4.3207993641299874e-36,
    6.32806923467558e-36,
    9.256589084615924e-36,
    1.3523971622714262e-35,
    1.9734761427383253e-35,
    2.876303672587244e-35,
    4.187103321891147e-35,
    6.087928845209486e-35,
    8.841038204297183e-35,
    1.282376755606874e-34,
    1.8578367072596436e-34,
    2.688313015568487e-34,
    3.885378962831306e-34,
    5.608788319921137e-34,
    8.087004631973908e-34,
    1.1646358970178155e-33,
    1.675241223517354e-33,
    2.406855908105992e-33,
    3.4538959657902366e-33,
    4.950575585863933e-33,
    7.087454486502034e-33,
    1.0134769480740822e-32,
    1.4475291980590076e-32,
    2.0650544963034448e-32,
    2.942573295231386e-32,
    4.1880852207332927e-32,
    5.953838375697028e-32,
    8.454204375262447e-32,
    1.1990670682241278e-31,
    1.6986742406871184e-31,
    2.4036624559063563e-31,
    3.3973044919481195e-31,
    4.796163081968997e-31,
    6.763208032348974e-31,
    9.526025671479126e-31,
    1.3402067669079888e-30,
    1.8833619138413142e-30,
    2.6436170249648464e-30,
    3.7065250223366695e-30,
    5.19086618284676e-30,
    7.261362053330398e-30,
    1.0146180203171089e-29,
    1.4161006891043406e-29,
    1.9742113303302788e-29,
    2.7491722396047227e-29,
    3.8240179669933624e-29,
    5.313105301898224e-29,
    7.373748286241778e-29,
    1.0222107389816226e-28,
    1.415486320872048e-28,
    1.9578746413814522e-28,
    2.705072526533459e-28,
    3.7332634104230333e-28,
    5.146534666342147e-28,
    7.086937128459061e-28,
    9.748112366169475e-28,
    1.339373194348478e-27,
    1.8382419342286147e-27,
    2.5201395234146487e-27,
    3.451184778908124e-27,
    4.721004452591645e-27,
    6.450955391482284e-27,
    8.805174328219335e-27,
    1.2005410934150219e-26,
    1.6350916970888762e-26,
    2.2245084924821957e-26,
    3.023108642809622e-26,
    4.103949742842274e-26,
    5.5651870354567e-26,
    7.538549796229627e-26,
    1.020063066625916e-25,
    1.378790464013215e-25,
    1.8616687599336314e-25,
    2.5109629422003203e-25,
    3.3830842061959976e-25,
    4.553242534417198e-25,
    6.121602035058964e-25,
    8.2214154185945e-25,
    1.1029762101545218e-24,
    1.4781707666369062e-24,
    1.978895424109575e-24,
    2.6464379188104803e-24,
    3.5354285756574125e-24,
    4.718074299167813e-24,
    6.2897110456530215e-24,
    8.376077411300577e-24,
    1.114283245551857e-23,
    1.4807996663700926e-23,
    1.965819615516452e-23,
    2.606984981035627e-23,
    3.4536773484325494e-23,
    4.570610603715379e-23,
    6.042501552228201e-23,
    7.98013549031682e-23,
    1.0528234886570264e-22,
    1.3875656227578662e-22,
    1.826858972253931e-22,
    2.4027627900068093e-22,
    3.156981351946647e-22,
    4.1437089021666033e-22,
    5.433296712022241e-22,
    7.116974800790046e-22,
    9.312925194766327e-22,
    1.2174085316034912e-21,
    1.5898163776147042e-21,
    2.074048226660871e-21,
    2.7030423623197483e-21,
    3.5192476569836754e-21,
    4.57731334889882e-21,
    5.9475233046128325e-21,
    7.720176239875561e-21,
    1.0011166624898494e-20,
    1.2969087984433491e-20,
    1.678426446915005e-20,
    2.170022221510514e-20,
    2.802824445877229e-20,
    3.6165820261504506e-20,
    4.6620004236580174e-20,
    6.003696404404323e-20,
    7.723931622111926e-20,
    9.927325472124253e-20,
    1.2746797957090924e-19,
    1.6351055903615893e-19,
    2.0954013683835617e-19,
    2.6826636223017547e-19,
    3.431181193420373e-19,
    4.384301174176927e-19,
    5.596767419570443e-19,
    7.137648399560291e-19,
    9.09399920223592e-19,
    1.1575437142381709e-18,
    1.4719853132561737e-18,
    1.8700533552651696e-18,
    2.373503202489228e-18,
    3.0096209962543177e-18,
    3.812596229089706e-18,
    4.825226432345824e-18,
    6.101032224655635e-18,
    7.706878888006605e-18,
    9.726222543116508e-18,
    1.2263125741735736e-17,
    1.5447219916278902e-17,
    1.9439831876746493e-17,
    2.4441539927822767e-17,
    3.070148400937007e-17,
    3.852882572301317e-17,
    4.8306840817475317e-17,
    6.051023181160759e-17,
    7.572637570812115e-17,
    9.468137570924501e-17,
    1.1827197189072583e-16,
    1.4760459037872846e-16,
    1.8404308141172397e-16,
    2.292670229452056e-16,
    2.853428591158588e-16,
    3.5481061494586445e-16,
    4.407894956145772e-16,
    5.471063588291682e-16,
    6.784518640802418e-16,
    8.405700786907165e-16,
    1.0404884881086046e-15,
    1.2867967529751192e-15,
    1.5899842207679915e-15,
    1.9628481855887824e-15,
    2.420987255212876e-15,
    2.983396999634097e-15,
    3.6731884020597114e-15,
    4.518453608015026e-15,
    5.5533081839693815e-15,
    6.819144686217287e-15,
    8.366138958782845e-15,
    1.025505840732146e-14,
    1.2559430746333659e-14,
    1.536814263687704e-14,
    1.878855050972046e-14,
    2.295020104037174e-14,
    2.800927659824607e-14,
    3.415390198634553e-14,
    4.1610473447093016e-14,
    5.065119984529376e-14,
    6.160307985822571e-14,
    7.485857872423782e-14,
    9.088831457124948e-14,
    1.1025611865751024e-13,
    1.336368972689061e-13,
    1.6183779698123287e-13,
    1.9582326118262562e-13,
    2.367446660805214e-13,
    2.8597534109426773e-13,
    3.451519140873409e-13,
    4.162230792204448e-13,
    5.015070676246131e-13,
    6.03759312394714e-13,
    7.262520439188706e-13,
    8.72867834229926e-13,
    1.0482094355211428e-12,
    1.2577286346215031e-12,
    1.5078772793631425e-12,
    1.8062841326770116e-12,
    2.161961785313475e-12,
    2.5855485189538053e-12,
    3.0895907702078127e-12,
    3.688872716216487e-12,
    4.400800499696409e-12,
    5.245849752652849e-12,
    6.2480863832372946e-12,
    7.435772081390336e-12,
    8.84206770078858e-12,
    1.0505849615078344e-11,
    1.2472656356684317e-11,
    1.4795785361690316e-11,
    1.753756250362276e-11,
    2.0770810346333652e-11,
    2.4580544730571295e-11,
    2.9065933484980443e-11,
    3.434255578111579e-11,
    4.054500600150277e-11,
    4.7829892035261385e-11,
    5.6379284741203625e-11,
    6.640468301658799e-11,
    7.815156758395918e-11,
    9.190462637275122e-11,
    1.0799374535276124e-10,
    1.268008710123831e-10,
    1.4876786451932216e-10,
    1.74405483124461e-10,
    2.0430364175690338e-10,
    2.3914312721449503e-10,
    2.7970895910385396e-10,
    3.269056159733885e-10,
    3.817743721813664e-10,
    4.4551302124368136e-10,
    5.194982950344086e-10,
    6.053113256177021e-10,
    7.047665380546539e-10,
    8.199444086696717e-10,
    9.532285744298172e-10,
    1.1073478357785958e-09,
    1.2854236580040683e-09,
    1.491023845586775e-09,
    1.72822314058609e-09,
    2.001671580658446e-09,
    2.3166715454782276e-09,
    2.679264522934083e-09,
    3.096328739334817e-09,
    3.5756889218806454e-09,
    4.12623959779839e-09,
    4.758083483837195e-09,
    5.482686683370169e-09,
    6.313052587329066e-09,
    7.2639165708570676e-09,
    8.351963791235912e-09,
    9.596072625737254e-09,
    1.1017586542060209e-08,
    1.2640534635743461e-08,
    1.4492193450328552e-08,
    1.6603259739591585e-08,
    1.900833222127903e-08,
    2.1746377893971258e-08,
    2.4861250234846575e-08,
    2.8402264595209913e-08,
    3.2424836536623637e-08,
    3.6991189444503125e-08,
    4.217113828867137e-08,
    4.8042957013891405e-08,
    5.469433765676271e-08,
    6.22234500910918e-08,
    7.074011195405636e-08,
    8.036707914102597e-08,
    9.124146819037386e-08,
    1.0351632266035264e-07,
    1.1736233678955543e-07,
    1.329697505712581e-07,
    1.5055043165071102e-07,
    1.7034016061430683e-07,
    1.9260113740161002e-07,
    2.1762472817325165e-07,
    2.457344730411403e-07,
    2.7728937690730207e-07,
    3.1268750709629466e-07,
    3.5236992313948114e-07,
    3.9682496595483487e-07,
    4.465929354072118e-07,
    5.022711873560359e-07,
    5.645196832683138e-07,
    6.340670275778235e-07,
    7.11717030485301e-07,
    7.983558360562267e-07,
    8.949596579263192e-07,
    1.0026031677183872e-06,
    1.122468583844404e-06,
    1.2558555110326343e-06,
    1.4041915840283064e-06,
    1.5690439718240814e-06,
    1.752131801811056e-06,
    1.955339566477463e-06,
    2.1807315786429663e-06,
    2.430567544327367e-06,
    2.707319326231095e-06,
    3.013688973857686e-06,
    3.352628100161771e-06,
    3.7273586883651438e-06,
    4.141395415941066e-06,
    4.598569586931443e-06,
    5.103054767118777e-06,
    5.6593942208382265e-06,
    6.2725302515551295e-06,
    6.9478355526859095e-06,
    7.691146678137248e-06,
    8.508799746665416e-06,
    9.407668497271871e-06,
    1.0395204816595095e-05,
    1.1479481862681785e-05,
    1.2669239913341479e-05,
    1.3973935069707597e-05,
    1.5403790949773984e-05,
    1.696985350845249e-05,
    1.8684049124645533e-05,
    2.0559246096618108e-05,
    2.2609319691036152e-05,
    2.4849220891274492e-05,
    2.7295048993055827e-05,
    2.996412819621134e-05,
    3.2875088342408915e-05,
    3.604794994924162e-05,
    3.9504213689579134e-05,
    4.326695446722577e-05,
    4.736092023522907e-05,
    5.1812635704773345e-05,
    5.665051108843785e-05,
    6.190495601867501e-05,
    6.760849877998484e-05,
    7.379591098749065e-05,
    8.050433784084524e-05,
    8.777343407581361e-05,
    9.564550572961183e-05,
    0.00010416565782861825,
    0.00011338194809898247,
    0.00012334554679125612,
    0.00013411090270053347,
    0.00014573591545205926,
    0.00015828211411101134,
    0.00017181484216207015,
    0.0001864034488901371,
    0.0002021214871800077,
    0.000219046917734835,
    0.00023726231969912497,
    0.00025685510765247445,
    0.0002779177549209025,
    0.00030054802313521676,
    0.0003248491979429762,
    0.00035093033076001525,
    0.00037890648642384124,
    0.0004088989965898848,
    0.00044103571868357846,
    0.00047545130020047206,
    0.0005122874481162499,
    0.0005516932031445424,
    0.0005938252185524575,
    0.0006388480432142857,
    0.0006869344085573079,
    0.000738265519021966,
    0.0007930313456317112,
    0.0008514309222354441,
    0.0009136726439568754,
    0.0009799745673544826,
    0.0010505647117635213,
    0.0011256813612645499,
    0.001205573366689213,
    0.0012905004470451765,
    0.0013807334897140153,
    0.0014765548487429975,
    0.0015782586405269018,
    0.0016861510361450426,
    0.0018005505495933413,
    0.0019217883211241594,
    0.0020502083948821964,
    0.0021861679899999116,
    0.0023300377642945258,
    0.002482202069687259,
    0.002643059198445161,
    0.0028130216193295457,
    0.002992516202719158,
    0.003181984433759803,
    0.0033818826125855557,
    0.0035926820406411,
    0.0038148691921335706,
    0.004048945869632165,
    0.0042954293428364935,
    0.004554852469532188,
    0.00482776379775617,
    0.005114727648201437,
    0.005416324175899198,
    0.00573314941022833,
    0.006065815272318456,
    0.006414949568929872,
    0.006781195961915488,
    0.007165213912395459,
    0.007567678598802712,
    0.007989280807986231,
    0.008430726798597823,
    0.008892738136022605,
    0.009376051498153782,
    0.009881418451358204,
    0.0104096051960253,
    0.010961392281140916,
    0.011537574287382694,
    0.012138959478288207,
    0.012766369419105429,
    0.01342063856299764,
    0.014102613804338308,
    0.014813153998897956,
    0.015553129450794324,
    0.016323421366144317,
    0.01712492127343627,
    0.017958530410709297,
    0.018825159079703627,
    0.019725725967226833,
    0.020661157434056002,
    0.021632386771778745,
    0.02264035342805233,
    0.023686002200847118,
    0.02477028240231675,
    0.025894146993021738,
    0.02705855168731477,
    0.028264454030775762,
    0.02951281245066403,
    0.030804585280439153,
    0.03214072975947491,
    0.033522201009168806,
    0.034949950986729594,
    0.03642492741799118,
    0.037948072710679105,
    0.039520322849618546,
    0.04114260627544751,
    0.0428158427484513,
    0.04454094219920364,
    0.04631880356775405,
    0.04815031363315264,
    0.050036345835155226,
    0.05197775909000013,
    0.05397539660218253,
    0.05603008467420094,
    0.05814263151627162,
    0.06031382605804783,
    0.06254443676439378,
    0.06483521045729242,
    0.0671868711459743,
    0.06960011886736657,
    0.07207562853896889,
    0.07461404882625912,
    0.07721600102672506,
    0.07988207797261601,
    0.08261284295448505,
    0.08540882866756976,
    0.08827053618304939,
    0.09119843394616507,
    0.09419295680316772,
    0.09725450505901795,
    0.10038344356770597,
    0.10358010085702578,
    0.10684476828956699,
    0.11017769926164483,
    0.11357910844180957,
    0.1170491710505248,
    0.12058802218252158,
    0.1241957561732657,
    0.1278724260108973,
    0.13161804279491499,
    0.1354325752428007,
    0.13931594924568627,
    0.14326804747407054,
    0.14728870903451483,
    0.15137772917813377,
    0.15553485906161307,
    0.15975980556138408,
    0.16405223114147904,
    0.16841175377549925,
    0.17283794692301982,
    0.17733033956065092,
    0.1818884162678814,
    0.18651161736771113,
    0.19119933912199738,
    0.19595093398131233,
    0.20076571088903353,
    0.20564293563926708,
    0.2105818312881121,
    0.2155815786176822,
    0.22064131665219125,
    0.22576014322532725,
    0.2309371155980406,
    0.23617125112577872,
    0.24146152797412418,
    0.24680688588169652,
    0.2522062269691016,
    0.25765841659263583,
    0.2631622842413703,
    0.2687166244761788,
    0.27432019790919543,
    0.27997173222212846,
    0.2856699232217963,
    0.2914134359311959,
    0.2972009057143533,
    0.3030309394331757,
    0.3089021166344572,
    0.31481299076516783,
    0.32076209041411846,
    0.3267479205780492,
    0.3327689639501807,
    0.3388236822292365,
    0.3449105174469147,
    0.35102789331180295,
    0.3571742165676931,
    0.36334787836425597,
    0.3695472556380454,
    0.3757707125017883,
    0.3820166016399366,
    0.38828326570846394,
    0.39456903873690224,
    0.4008722475306368,
    0.4071912130715024,
    0.41352425191474645,
    0.41986967758045224,
    0.42622580193755144,
    0.4325909365785989,
    0.4389633941835115,
    0.4453414898705096,
    0.4517235425325729,
    0.45810787615773596,
    0.4644928211316182,
    0.47087671552063887,
    0.4772579063344038,
    0.4836347507658334,
    0.4900056174076253,
    0.49636888744374913,
    0.5027229558146848,
    0.5090662323552244,
    0.5153971429036774,
    0.5217141303814253,
    0.528015655841804,
    0.5343001994873842,
    0.5405662616547624,
    0.5468123637660689,
    0.553037049246442,
    0.5592388844068034,
    0.5654164592913248,
    0.5715683884890466,
    0.5776933119091843,
    0.5837898955197051,
    0.5898568320488475,
    0.5958928416492922,
    0.6018966725247855,
    0.6078671015190588,
    0.6138029346669582,
    0.6197030077077489,
    0.6255661865606355,
    0.6313913677625784,
    0.6371774788685538,
    0.6429234788144542,
    0.6486283582428762,
    0.6542911397921101,
    0.6599108783486632,
    0.6654866612637369,
    0.6710176085340773,
    0.6765028729477147,
    0.6819416401950911,
    0.6873331289461695,
    0.6926765908941173,
    0.697971310766207,
    0.7032166063026133,
    0.7084118282038133,
    0.7135563600473175,
    0.7186496181745068,
    0.7236910515483593,
    0.7286801415828696,
    0.7336164019450137,
    0.7384993783300895,
    0.7433286482113163,
    0.7481038205645811,
    0.7528245355692086,
    0.7574904642856912,
    0.762101308311278,
    0.7666567994143604,
    0.7711566991485784,
    0.7756007984475938,
    0.7799889172014598,
    0.7843209038155351,
    0.788596634752873,
    0.7928160140610357,
    0.7969789728842528,
    0.8010854689618646,
    0.8051354861139572,
    0.8091290337151172,
    0.8130661461572128,
    0.8169468823020727,
    0.8207713249249676,
    0.8245395801497686,
    0.8282517768766107,
    0.8319080662029362,
    0.8355086208387212,
    0.8390536345167185,
    0.8425433213984788,
    0.8459779154769603,
    0.8493576699764673,
    0.8526828567506467,
    0.8559537656792893,
    0.8591707040646029,
    0.8623339960276659,
    0.8654439819056898,
    0.8685010176507522,
    0.8715054742306051,
    0.8744577370321396,
    0.8773582052681066,
    0.8802072913876094,
    0.883005420490927,
    0.8857530297491473,
    0.8884505678291091,
    0.8910984943241018,
    0.8936972791907746,
    0.8962474021926572,
    0.8987493523506972,
    0.9012036274011721,
    0.9036107332613534,
    0.9059711835032234,
    0.9082854988355636,
    0.9105542065947171,
    0.9127778402442693,
    0.9149569388839065,
    0.9170920467676829,
    0.9191837128318903,
    0.9212324902327362,
    0.9232389358939881,
    0.9252036100647428,
    0.9271270758874522,
    0.9290098989763195,
    0.9308526470061828,
    0.9326558893119385,
    0.9344201964986104,
    0.9361461400620849,
    0.9378342920205719,
    0.939485224556801,
    0.941099509670973,
    0.9426777188444538,
    0.9442204227142037,
    0.9457281907579005,
    0.9472015909897327,
    0.9486411896667861,
    0.9500475510059957,
    0.9514212369115445,
    0.9527628067126794,
    0.9540728169117945,
    0.9553518209427294,
    0.9566003689391416,
    0.9578190075128531,
    0.9590082795420293,
    0.9601687239690808,
    0.9613008756081232,
    0.9624052649618787,
    0.9634824180478334,
    0.9645328562335386,
    0.9655570960808593,
    0.9665556491990187,
    0.9675290221062791,
    0.9684777161000674,
    0.9694022271353889,
    0.9703030457113399,
    0.9711806567655382,
    0.9720355395762993,
    0.9728681676723512,
    0.9736790087499394,
    0.974468524597083,
    0.975237171024844,
    0.975985397805387,
    0.9767136486166579,
    0.9774223609934745,
    0.978111966284866,
    0.9787828896174428,
    0.9794355498646312,
    0.9800703596215715,
    0.9806877251855052,
    0.9812880465414476,
    0.9818717173529927,
    0.9824391249580264,
    0.9829906503692059,
    0.9835266682790146,
    0.9840475470691955,
    0.9845536488244269,
    0.9850453293500349,
    0.9855229381935945,
    0.9859868186702423,
    0.9864373078915355,
    0.986874736797717,
    0.987299430193184,
    0.9877117067850589,
    0.9881118792246674,
    0.9885002541517928,
    0.9888771322415637,
    0.9892428082538209,
    0.9895975710848257,
    0.9899417038211873,
    0.9902754837958498,
    0.9905991826460396,
    0.9909130663730128,
    0.9912173954035126,
    0.9915124246527915,
    0.9917984035890935,
    0.9920755762994802,
    0.9923441815568919,
    0.9926044528883297,
    0.9928566186440692,
    0.9931009020677914,
    0.9933375213675416,
    0.9935666897874222,
    0.9937886156799196,
    0.9940035025787977,
    0.9942115492724533,
    0.9944129498776562,
    0.9946078939136108,
    0.9947965663762464,
    0.994979147812667,
    0.9951558143957054,
    0.9953267379984971,
    0.9954920862690144,
    0.9956520227045172,
    0.9958067067258312,
    0.995956293751431,
    0.9961009352712453,
    0.9962407789201639,
    0.9963759685511668,
    0.9965066443080557,
    0.9966329426977327,
    0.9967549966619907,
    0.9968729356487663,
    0.9969868856828353,
    0.9970969694359024,
    0.9972033062960645,
    0.9973060124366048,
    0.997405200884102,
    0.9975009815858223,
    0.9975934614763666,
    0.9976827445435621,
    0.99776893189356,
    0.9978521218151406,
    0.9979324098431894,
    0.9980098888213407,
    0.9980846489637654,
    0.9981567779161095,
    0.9982263608155315,
    0.9982934803498795,
    0.9983582168159617,
    0.9984206481769103,
    0.9984808501186478,
    0.9985388961054324,
    0.9985948574344857,
    0.9986488032897006,
    0.9987008007944266,
    0.9987509150633276,
    0.9987992092533171,
    0.9988457446135678,
    0.9988905805345998,
    0.9989337745964475,
    0.9989753826159102,
    0.9990154586928859,
    0.9990540552558035,
    0.9990912231061371,
    0.9991270114620374,
    0.9991614680010631,
    0.9991946389020205,
    0.9992265688859382,
    0.9992573012561652,
    0.9992868779376,
    0.9993153395150783,
    0.9993427252709088,
    0.9993690732215718,
    0.9993944201535989,
    0.9994188016586301,
    0.9994422521676685,
    0.9994648049845437,
    0.9994864923185821,
    0.9995073453165142,
    0.9995273940936074,
    0.999546667764061,
    0.9995651944706537,
    0.9995830014136594,
    0.9996001148790624,
    0.999616560266048,
    0.9996323621138156,
    0.9996475441277026,
    0.9996621292046414,
    0.9996761394579606,
    0.9996895962415442,
    0.9997025201733464,
    0.9997149311582963,
    0.9997268484105933,
    0.999738290475394,
    0.9997492752499282,
    0.9997598200040266,
    0.9997699414001028,
    0.9997796555125672,
    0.9997889778467195,
    0.9997979233570962,
    0.9998065064653222,
    0.9998147410774381,
    0.9998226406007477,
    0.999830217960178,
    0.9998374856141659,
    0.999844455570091,
    0.9998511393992514,
    0.9998575482514065,
    0.9998636928688822,
    0.9998695836002679,
    0.9998752304136972,
    0.9998806429097338,
    0.9998858303338701,
    0.9998908015886421,
    0.9998955652453737,
    0.9999001295555743,
    0.9999045024619678,
    0.9999086916091923,
    0.9999127043541594,
    0.9999165477760943,
    0.9999202286862617,
    0.9999237536373721,
    0.9999271289327112,
    0.9999303606349578,
    0.999933454574728,
    0.9999364163588457,
    0.9999392513783434,
    0.9999419648162015,
    0.999944561654836,
    0.9999470466833477,
    0.9999494245045143,
    0.9999516995415789,
    0.999953876044784,
    0.9999559580977094,
    0.9999579496233859,
    0.999959854390209,
    0.9999616760176483,
    0.9999634179817677,
    0.9999650836205565,
    0.999966676139077,
    0.9999681986144335,
    0.9999696540005745,
    0.999971045132927,
    0.9999723747328704,
    0.9999736454120502,
    0.999974859676546,
    0.999976019930893,
    0.9999771284819557,
    0.9999781875426735,
    0.9999791992356637,
    0.9999801655967047,
    0.9999810885780873,
    0.999981970051853,
    0.9999828118129059,
    0.999983615582025,
    0.9999843830087525,
    0.9999851156741896,
    0.9999858150936836,
    0.999986482719416,
    0.9999871199428993,
    0.9999877280973801,
    0.9999883084601497,
    0.9999888622547743,
    0.9999893906532392,
    0.9999898947780118,
    0.999990375704031,
    0.9999908344606162,
    0.9999912720333113,
    0.9999916893656512,
    0.9999920873608672,
    0.9999924668835231,
    0.999992828761093,
    0.9999931737854764,
    0.9999935027144514,
    0.9999938162730797,
    0.9999941151550519,
    0.9999944000239803,
    0.9999946715146424,
    0.9999949302341787,
    0.9999951767632402,
    0.9999954116570913,
    0.9999956354466683,
    0.9999958486396007,
    0.9999960517211878,
    0.9999962451553355,
    0.9999964293854622,
    0.9999966048353579,
    0.9999967719100249,
    0.999996930996465,
    0.999997082464451,
    0.9999972266672597,
    0.9999973639423788,
    0.9999974946121786,
    0.9999976189845655,
    0.9999977373536005,
    0.9999978500000998,
    0.9999979571922037,
    0.9999980591859272,
    0.9999981562256861,
    0.9999982485448011,
    0.9999983363659817,
    0.9999984199017875,
    0.9999984993550782,
    0.9999985749194329,
    0.9999986467795605,
    0.9999987151116909,
    0.9999987800839497,
    0.9999988418567127,
    0.9999989005829566,
    0.9999989564085808,
    0.9999990094727255,
    0.9999990599080752,
    0.9999991078411412,
    0.9999991533925441,
    0.999999196677275,
    0.9999992378049496,
    0.9999992768800505,
    0.9999993140021579,
    0.9999993492661731,
    0.999999382762527,
    0.9999994145773885,
    0.999999444792854,
    0.999999473487135,
    0.9999995007347351,
    0.9999995266066194,
    0.9999995511703766,
    0.999999574490377,
    0.9999995966279157,
    0.9999996176413569,
    0.9999996375862713,
    0.9999996565155617,
    0.999999674479589,
    0.9999996915262915,
    0.9999997077012933,
    0.9999997230480168,
    0.9999997376077816,
    0.9999997514199082,
    0.9999997645218056,
    0.999999776949066,
    0.999999788735547,
    0.9999997999134554,
    0.9999998105134251,
    0.9999998205645901,
    0.999999830094656,
    0.9999998391299705,
    0.9999998476955825,
    0.9999998558153101,
    0.9999998635117947,
    0.9999998708065617,
    0.9999998777200673,
    0.9999998842717568,
    0.9999998904801108,
    0.999999896362689,
    0.999999901936177,
    0.999999907216431,
    0.9999999122185106,
    0.9999999169567271,
    0.9999999214446711,
    0.9999999256952526,
    0.9999999297207337,
    0.999999933532757,
    0.9999999371423807,
    0.9999999405601039,
    0.9999999437958935,
    0.9999999468592139,
    0.9999999497590483,
    0.999999952503924,
    0.9999999551019347,
    0.9999999575607611,
    0.999999959887694,
    0.9999999620896505,
    0.9999999641731919,
    0.9999999661445467,
    0.9999999680096211,
    0.9999999697740208,
    0.9999999714430595,
    0.9999999730217801,
    0.9999999745149636,
    0.9999999759271445,
    0.999999977262621,
    0.9999999785254717,
    0.9999999797195609,
    0.9999999808485533,
    0.9999999819159214,
    0.9999999829249592,
    0.9999999838787862,
    0.9999999847803606,
    0.9999999856324846,
    0.9999999864378142,
    0.999999987198866,
    0.9999999879180235,
    0.999999988597546,
    0.9999999892395735,
    0.9999999898461317,
    0.9999999904203344,
    0.9999999909626643,
    0.9999999914748555,
    0.9999999919585497,
    0.9999999924153011,
    0.9999999928465811,
    0.9999999932537822,
    0.9999999936382227,
    0.9999999940011499,
    0.9999999943437444,
    0.9999999946671234,
    0.9999999949723439,
    0.999999995260406,
    0.9999999955322558,
    0.9999999957887884,
    0.9999999960308504,
    0.9999999962592429,
    0.9999999964747229,
    0.999999996678007,
    0.9999999968697724,
    0.9999999970506597,
    0.9999999972212744,
    0.9999999973821893,
    0.9999999975339454,
    0.9999999976770546,
    0.9999999978120004,
    0.9999999979392402,
    0.9999999980592058,
    0.9999999981723056,
    0.9999999982789254,
    0.9999999983794299,
    0.9999999984741633,
    0.9999999985634513,
    0.9999999986476013,
    0.9999999987269036,
    0.9999999988016325,
    0.9999999988720472,
    0.9999999989383922,
    0.9999999990008988,
    0.9999999990597851,
    0.999999999115257,
    0.9999999991675093,
    0.9999999992167254,
    0.9999999992630788,
    0.9999999993067331,
    0.9999999993478428,
    0.9999999993865536,
    0.9999999994230032,
    0.9999999994573214,
    0.9999999994896308,
    0.9999999995200468,
    0.9999999995486787,
    0.9999999995756294,
    0.9999999996009957,
    0.9999999996248695,
    0.999999999647337,
    0.9999999996684797,
    0.9999999996883744,
    0.9999999997070936,
    0.9999999997247057,
    0.9999999997412748,
    0.999999999756862,
    0.9999999997715244,
    0.9999999997853161,
    0.9999999997982877,
    0.9999999998104875,
    0.9999999998219604,
    0.9999999998327492,
    0.999999999842894,
    0.9999999998524326,
    0.9999999998614006,
    0.9999999998698318,
    0.9999999998777577,
    0.9999999998852079,
    0.9999999998922109,
    0.9999999998987928,
    0.9999999999049788,
    0.9999999999107921,
    0.9999999999162549,
    0.9999999999213881,
    0.9999999999262111,
    0.9999999999307425,
    0.9999999999349997,
    0.9999999999389988,
    0.9999999999427555,
    0.999999999946284,
    0.9999999999495982,
    0.9999999999527107,
    0.9999999999556338,
    0.9999999999583787,
    0.9999999999609562,
    0.9999999999633763,
    0.9999999999656485,
    0.9999999999677817,
    0.9999999999697842,
    0.999999999971664,
    0.9999999999734285,
    0.9999999999750846,
    0.9999999999766388,
    0.9999999999780975,
    0.9999999999794663,
    0.9999999999807507,
    0.999999999981956,
    0.9999999999830866,
]
