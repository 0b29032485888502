"""BraceLab: finite braces, set-theoretic Yang-Baxter solutions and a free-algebra lab."""

__version__ = "1.0.0"
