"""
Exact Pell and Gauss units in quaternion orders, with machine-checked
Ping-Pong and free-semigroup certificates.
"""
