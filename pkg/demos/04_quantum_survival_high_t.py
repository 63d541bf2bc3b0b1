"""
The quantum correction that survives high temperature
=====================================================

Naively, quantum corrections should die out as both baths get hot.  Here
they do not: heating the second bath at fixed T1 drives the quantum piece
of the heat current onto a logarithmic term

    (hbar/pi) (M/L)^2 (lambda_+ lambda_- / omega_d)^2 log(T2/T1),

which grows without bound instead of vanishing.  The first correction on
top of it decays only as 1/T, so the classical result is never recovered
exactly.  This script tabulates the approach for the three hot-bath
sweeps of the `fig4` preset.
"""

from overheat import (
    BathPair,
    CircuitParams,
    Method,
    assemble_report,
    derive_scales,
    heat_quantum,
)

circuit = CircuitParams(R=2.0, L=2.0, C=5e-5, M=1.0, omega_c=5.0)
scales = derive_scales(circuit)

for T1 in (2.0, 5.0, 10.0):
    print(f"T1 = {T1:g}, heating the second bath")
    print(f"  {'T2/T1':>8s} {'quantum':>12s} {'log term':>12s} {'residual':>10s}")
    for ratio in (1.0 + 1e-9, 10.0, 100.0, 1000.0):
        baths = BathPair.from_temperatures(T1, ratio * T1)
        quantum = heat_quantum(circuit, scales, baths)
        # the HighTempAsymptotic report carries the bare log term in its
        # quantum column
        log_term = assemble_report(
            circuit, scales, baths, Method.HIGH_TEMP_ASYMPTOTIC
        ).q_quantum
        print(
            f"  {ratio:8.3g} {quantum:12.6f} {log_term:12.6f} "
            f"{abs(quantum - log_term):10.2e}"
        )
    print()

# `heat sweep --preset fig4 --out fig4.csv --plot fig4_plot.py` produces the
# same sweeps as CSV plus a plot script with the logarithmic asymptote dashed.
