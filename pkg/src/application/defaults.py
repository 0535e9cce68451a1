"""
Tuned defaults for the decision engine.

Values chosen for desk-scale datasets (hundreds of rows, a handful of
columns).
"""

# Cell texts read as missing when loading CSV files
MISSING_TOKENS = frozenset({"", "NaN", "nan", "?"})

# Share of rows used to train the decision machine
TRAIN_FRACTION = 0.8

# Rational power must strictly exceed this multiple of irrational power
SATISFICING_THRESHOLD = 1.0

# Observed information must strictly exceed this multiple of missing information
INFORMATION_THRESHOLD = 1.0

# Hidden width as a fraction of input width (floor of 2 units)
HIDDEN_SIZE_RATIO = 0.75
MIN_HIDDEN_SIZE = 2

# Decision threshold on sigmoid outputs
CLASSIFICATION_CUTOFF = 0.5

# Default STFT geometry
STFT_WINDOW_SIZE = 8
STFT_HOP = 4
