# Sampling / Multiplier Lab Tests
