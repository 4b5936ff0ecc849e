"""lrc

Locally recoverable codes over finite fields.

This package contains the field and polynomial substrate, the good
polynomial constructions, the code builders (optimal LRC, multiple
recovering sets, arbitrary length, CRT and local-MDS variants), closed-form
bounds, a brute-force verification oracle and a command-line surface.
"""
