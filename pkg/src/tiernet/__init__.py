"""Nested-subnet neural networks with MAC-budgeted construction and anytime inference.

A tiernet model is a single weight store plus a per-unit tier (subnet level)
assignment.  Subnet k consists of all units with tier <= k, so smaller subnets
are strictly contained in larger ones and their activations can be reused
verbatim when a running inference is granted more compute.
"""

__version__ = "0.1.0"
