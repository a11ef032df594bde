import pandas as pd


class CheckReport:
    """Named collection of pass/fail rows for one family of checks."""

    def __init__(self, name):
        self.name = name
        self.rows = []

    def add(self, subject, passed, detail=''):
        self.rows.append({
            'check': self.name,
            'subject': subject,
            'passed': bool(passed),
            'detail': detail,
        })

    def extend(self, other):
        self.rows.extend(other.rows)

    @property
    def passed(self):
        return all(row['passed'] for row in self.rows)

    @property
    def failures(self):
        return [row for row in self.rows if not row['passed']]

    def to_frame(self):
        return pd.DataFrame(self.rows, columns=['check', 'subject', 'passed', 'detail'])

    def summary(self):
        return f'{self.name}: {sum(r["passed"] for r in self.rows)}/{len(self.rows)} passed'

    def to_json(self):
        return {'name': self.name, 'passed': self.passed, 'rows': self.rows}

    def __len__(self):
        return len(self.rows)
