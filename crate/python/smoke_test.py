"""Smoke test for the moonshine_py extension module.

Uses an installed ``moonshine_py`` if importable; otherwise loads the shared
library built by ``cargo build -p moonshine-py --features extension-module``
from the workspace ``target/`` directory.
"""

import importlib.machinery
import importlib.util
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    try:
        import moonshine_py

        return moonshine_py
    except ImportError:
        pass
    suffix = {"darwin": "dylib", "win32": "dll"}.get(sys.platform, "so")
    prefix = "" if sys.platform == "win32" else "lib"
    candidates = [ROOT / "target" / p / f"{prefix}moonshine_py.{suffix}" for p in ("release", "debug")]
    candidates = sorted((c for c in candidates if c.exists()), key=lambda c: c.stat().st_mtime)
    if candidates:
        lib = candidates[-1]
        loader = importlib.machinery.ExtensionFileLoader("moonshine_py", str(lib))
        spec = importlib.util.spec_from_file_location("moonshine_py", lib, loader=loader)
        module = importlib.util.module_from_spec(spec)
        loader.exec_module(module)
        return module
    sys.exit(
        "moonshine_py not found: run `cargo build -p moonshine-py --features extension-module` "
        "or `pip install ./crates/moonshine-py`"
    )


def main():
    m = load_module()
    checks = []

    def check(name, got, want):
        ok = got == want
        checks.append(ok)
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {got!r}" + ("" if ok else f" (want {want!r})"))

    check("cusps 2+", m.cusps("2+"), [("2+", 1, 3)])
    check("ambiguous 8|4 readings", len(m.cusps("8|4")), 2)
    check("j", m.series_ints("j", 5), [1, 744, 196884, 21493760, 864299970])
    offset, coeffs = m.series("j-cube-root", 4)
    check("j^(1/3)", (offset, coeffs), ("-1/3", ["1", "248", "4124", "34752"]))
    check("T2A", m.series_ints("t2a", 5), [1, 0, 4372, 96256, 1240002])
    check("Gamma0(25) cusps", m.gamma0_cusp_count(25), 6)
    check("supersingular primes", m.supersingular_primes(200)[-1], 71)
    check("27 lines", len(m.del_pezzo(3)), 27)
    check("E8 roots", len(m.del_pezzo(1, roots=True)), 240)
    passed, _ = m.verify("baby")
    check("baby suite", passed, True)
    try:
        m.cusps("7|2+")
        check("bad symbol raises", False, True)
    except ValueError:
        check("bad symbol raises", True, True)
    try:
        m.verify("all", data_dir="/nonexistent/moonshine-data")
        check("missing data raises", False, True)
    except OSError:
        check("missing data raises", True, True)
    print(f"{sum(checks)}/{len(checks)} checks passed")
    return 0 if all(checks) else 1


if __name__ == "__main__":
    sys.exit(main())
