# Convert rs_coeffs.json into the C++ table included by core/src/zeta.cpp.
import json
import sys

src = sys.argv[1] if len(sys.argv) > 1 else "rs_coeffs.json"
dst = sys.argv[2] if len(sys.argv) > 2 else "rs_coefficients.inc"
coeffs = json.load(open(src))
with open(dst, "w") as out:
    out.write("// Generated by tools/oracles/rs_to_inc.py from rs_coefficients.py output.\n")
    out.write("// Power-series coefficients of C_k(q), q = p - 1/2, ascending powers.\n")
    for k, c in enumerate(coeffs):
        vals = ["0.0" if abs(float(v)) < 1e-40 else v for v in c]
        out.write(f"constexpr double kRsC{k}[] = {{\n")
        for i in range(0, len(vals), 3):
            out.write("    " + ", ".join(vals[i:i + 3]) + ",\n")
        out.write("};\n")
