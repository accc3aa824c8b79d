"""Regenerate src/ascyclo/algebra/_moduli.py.

For every prime power p^t <= 2^16 with t >= 2 the table holds the first
monic primitive polynomial of degree t over F_p, where "first" means the
smallest code c_0 + c_1 p + ... + c_{t-1} p^{t-1} of the lower coefficients.
"""
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from ascyclo.algebra.field import MAX_Q, fp_is_primitive, is_prime  # noqa: E402


def first_primitive(p, t):
    for code in range(p**t):
        low = []
        c = code
        for _ in range(t):
            c, r = divmod(c, p)
            low.append(r)
        m = low + [1]
        if m[0] and fp_is_primitive(m, p):
            return tuple(m)
    raise RuntimeError((p, t))


def main():
    rows = []
    for p in range(2, 257):
        if not is_prime(p):
            continue
        t = 2
        while p**t <= MAX_Q:
            rows.append(((p, t), first_primitive(p, t)))
            t += 1
    out = pathlib.Path(__file__).resolve().parents[1] / "src/ascyclo/algebra/_moduli.py"
    lines = [
        '"""Default defining polynomials for F_{p^t}, p^t <= 2^16, t >= 2.',
        "",
        "Generated by tools/gen_moduli.py: the first monic primitive polynomial of",
        "degree t over F_p, coefficients low degree first.  Do not edit by hand.",
        '"""',
        "",
        "DEFAULT_MODULI = {",
    ]
    for key, m in sorted(rows):
        lines.append(f"    {key}: {m},")
    lines.append("}")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(rows)} entries to {out}")


if __name__ == "__main__":
    main()
