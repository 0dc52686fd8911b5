"""Allow ``python -m diagcalc`` as an alias for the ``diagcalc`` script."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
