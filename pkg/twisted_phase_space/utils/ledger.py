from dataclasses import dataclass, asdict

import pandas as pd

VERDICTS = ('match', 'sign-flip', 'reference-ambiguous', 'reference-inconsistent', 'mismatch')

# verdicts accepted by `verify`; anything else fails the run
ACCEPTED = ('match', 'sign-flip', 'reference-ambiguous', 'reference-inconsistent')


@dataclass
class LedgerEntry:
    relation: str
    engine: str
    reference: str
    verdict: str
    detail: str = ''
    lhs: str = ''

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f'Incorrect verdict specified: {self.verdict}')


class DiscrepancyLedger:
    """Engine-versus-printed comparison, one entry per relation."""

    def __init__(self, name, entries=None):
        self.name = name
        self.entries = list(entries or [])

    def add(self, relation, engine, reference, verdict, detail='', lhs=''):
        self.entries.append(LedgerEntry(relation, str(engine), str(reference), verdict, detail, lhs))

    def extend(self, other):
        self.entries.extend(other.entries)

    def verdict(self, relation):
        for entry in self.entries:
            if entry.relation == relation:
                return entry.verdict
        raise KeyError(relation)

    def counts(self):
        return {v: sum(e.verdict == v for e in self.entries) for v in VERDICTS}

    @property
    def passed(self):
        return all(e.verdict in ACCEPTED for e in self.entries)

    def to_frame(self):
        return pd.DataFrame([asdict(e) for e in self.entries],
                            columns=['relation', 'lhs', 'engine', 'reference', 'verdict', 'detail'])

    def to_json(self):
        return {'name': self.name, 'entries': [asdict(e) for e in self.entries]}

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)
