from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List


@dataclass
class LabelMap:
    """Bijection between raw dataset labels and dense ids [0, n)."""

    labels: List[Hashable] = field(default_factory=list)
    index: Dict[Hashable, int] = field(default_factory=dict)

    @classmethod
    def from_labels(cls, labels: Iterable[Hashable]):
        label_map = cls()
        for label in labels:
            label_map.intern(label)
        return label_map

    def intern(self, label: Hashable) -> int:
        """Id of `label`, assigning the next free id on first sight."""
        if label not in self.index:
            self.index[label] = len(self.labels)
            self.labels.append(label)
        return self.index[label]

    def id_of(self, label: Hashable) -> int:
        return self.index[label]

    def label_of(self, node: int) -> Hashable:
        return self.labels[node]

    def __len__(self) -> int:
        return len(self.labels)
