"""Metaplectic Demazure-Lusztig operators and Gelfand-Tsetlin crystal sums."""
