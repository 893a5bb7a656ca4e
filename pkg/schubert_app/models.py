# schubert_app/models.py
# Persistent cache of structure-constant tables; lives in the "tables" database.

from django.db import models


class TableCache(models.Model):
    """One full structure-constant table for S_n in one theory."""
    COHOMOLOGY = "H"
    K_THEORY = "K"
    THEORY_CHOICES = [
        (COHOMOLOGY, "Cohomology (Schubert basis)"),
        (K_THEORY, "K-theory (structure sheaf basis)"),
    ]

    table_id = models.AutoField(primary_key=True)
    theory = models.CharField(max_length=1, choices=THEORY_CHOICES)
    window = models.PositiveSmallIntegerField(help_text="n for the symmetric group S_n")
    basis = models.CharField(max_length=8, help_text="Basis tag, e.g. 'schubert' or 'O'")
    payload = models.JSONField(help_text="Sorted sparse entries with decimal-string coefficients")
    checksum = models.CharField(max_length=128)
    checksum_algorithm = models.CharField(max_length=16, default="sha256")
    engine_version = models.CharField(max_length=20, db_index=True)
    entry_count = models.PositiveIntegerField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        db_table = "table_cache"
        verbose_name = "Structure-Constant Table"
        verbose_name_plural = "Structure-Constant Tables"
        unique_together = ("theory", "window", "basis", "engine_version")
        ordering = ["theory", "window", "basis"]

    def __str__(self):
        return f"{self.theory} table for S_{self.window} ({self.basis}, v{self.engine_version})"
