from enum import Enum


class Order(Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    UNKNOWN = "Unknown"

    @classmethod
    def of(cls, c):
        """Map a three-way integer comparison result to an Order."""
        if c < 0:
            return cls.LESS
        if c > 0:
            return cls.GREATER
        return cls.EQUAL

    def flip(self):
        if self is Order.LESS:
            return Order.GREATER
        if self is Order.GREATER:
            return Order.LESS
        return self

    def __str__(self):
        return self.value
