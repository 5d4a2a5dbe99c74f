import json
import logging
from collections import namedtuple
from collections.abc import MutableMapping

__all__ = ['Check', 'CheckReport']

logger = logging.getLogger(__name__)

Check = namedtuple("Check", "name passed detail witness")


class CheckReport(MutableMapping):
    """
    Ordered collection of named checks with a pass/fail verdict.

    Behaves like a dict ``name -> Check``; printing a report gives a small
    table with one row per check.
    """

    def __init__(self, title="", *args, **kwargs):
        self.store = dict()
        self.update(dict(*args, **kwargs))
        self.title = title

    def keys(self):
        return self.store.keys()

    def __getitem__(self, key):
        return self.store[key]

    def __setitem__(self, key, value):
        if not isinstance(value, Check):
            value = Check(key, *value)
        self.store[key] = value

    def __delitem__(self, key):
        del self.store[key]

    def __iter__(self):
        return iter(self.store)

    def __len__(self):
        return len(self.store)

    def add(self, name, passed, detail="", witness=None):
        if passed:
            logger.debug("%s: %s passed (%s)", self.title, name, detail)
        else:
            logger.info("%s: %s failed (%s)", self.title, name, detail)
        self.store[name] = Check(name, bool(passed), detail, witness)
        return self.store[name]

    def extend(self, other, prefix=""):
        for name, check in other.items():
            self.add(prefix + name, check.passed, check.detail, check.witness)
        return self

    @property
    def passed(self):
        return all(check.passed for check in self.store.values())

    @property
    def failures(self):
        return [check for check in self.store.values() if not check.passed]

    def to_dict(self):
        return {
            "passed": self.passed,
            "checks": [
                {
                    "name": check.name,
                    "passed": check.passed,
                    "detail": check.detail,
                    "witness": check.witness,
                }
                for check in self.store.values()
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    def __repr__(self):
        dash = "-" * 60 + "\n"
        descr = ""
        if self.title:
            descr += self.title + "\n"
        descr += dash
        descr += "{:<28s}{:>8s}  {}\n".format("check", "passed", "detail")
        descr += dash
        for check in self.store.values():
            descr += "{:<28s}{:>8s}  {}\n".format(
                check.name, "yes" if check.passed else "NO", check.detail
            )
            if check.witness is not None and not check.passed:
                descr += "{:<36s}  witness: {}\n".format("", check.witness)
        return descr
