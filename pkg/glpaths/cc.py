# label set classifications
EMPTY = "empty"
ONE = "one"
TWO = "two"
THREE_OR_MORE = "three_or_more"

# group kinds
CYCLIC = "cyclic"
INTEGER = "integer"
SYMMETRIC = "symmetric"
FREE = "free"

PERM_IDENTITY = "id"
FREE_IDENTITY = "e"
FREE_INVERSE_MARK = "'"

# contraction kinds
TWO_CONTRACTION = "two"
THREE_CONTRACTION = "three"

# verdicts of the D0 membership test
IN_D0 = "in_d0"
NOT_IN_D0 = "not_in_d0"
THREE_LABELS = "three_labels"

# contracted graphs are enumerated at or below this vertex count
ENUM_LIMIT = 6

# cli exit codes
EXIT_ANSWERED = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
