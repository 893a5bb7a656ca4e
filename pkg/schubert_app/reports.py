# schubert_app/reports.py
from dataclasses import dataclass, field

# witnesses beyond this are counted but not stored
MAX_WITNESSES = 25


@dataclass
class VerificationReport:
    """Outcome of one verification suite or oracle scan."""

    suite: str
    parameters: dict = field(default_factory=dict)
    passed: bool = True
    witnesses: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def count(self, key, amount=1):
        self.counts[key] = self.counts.get(key, 0) + amount

    def check(self, condition, key, witness):
        """Count a check under ``key`` and record ``witness`` if it failed."""
        self.count(key)
        if not condition:
            self.fail(dict(witness, check=key))
        return condition

    def fail(self, witness):
        self.passed = False
        self.count("failures")
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)

    def note(self, text):
        self.notes.append(text)

    def merge(self, other):
        self.passed = self.passed and other.passed
        for key, value in other.counts.items():
            self.count(key, value)
        room = MAX_WITNESSES - len(self.witnesses)
        self.witnesses.extend(other.witnesses[:max(room, 0)])
        self.notes.extend(other.notes)
        return self

    def sorted_witnesses(self):
        return sorted(self.witnesses, key=lambda w: repr(sorted(w.items())))
