# (c) 2025- The pycoset developers
#
# This file is released under the MIT License:
#    https://opensource.org/licenses/MIT
# This software is distributed on an "AS IS" basis,
# WITHOUT WARRANTY OF ANY KIND, either express or implied.

"""
Exact character tables of small finite groups, and a lab for checking when a
coset of a normal subgroup lies in the union of two conjugacy classes.
"""

__version__ = "0.3.0"
