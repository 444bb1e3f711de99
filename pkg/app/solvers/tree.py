"""
Augmented AVL tree over open drones.

Nodes are ordered by (key, index) where key is the drone's remaining battery
capacity and index breaks ties. DroneTree nodes also carry `data`, the
largest rendezvous time among the drone's deliveries; ClassTree nodes leave
it unset because a color class is already compatible.

The search follows the greedy packer's Find/Check pair: a reverse in-order
walk (largest remaining capacity first) that stops as soon as a node cannot
hold the delivery's cost, or the probe budget d_j = N(j) + 1 runs out.
"""
import enum
import math
from dataclasses import asdict, dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from app.core.config import TREE_AUDIT
from app.core.errors import SolverInvariantError
from app.models import Delivery


# AVL trees satisfy height < 1.4405 * log2(n + 2)
HEIGHT_FACTOR = 1.45


class DroneNode:
    __slots__ = ("index", "key", "data", "left", "right", "height")

    def __init__(self, index: int, key: int, data: Optional[int] = None):
        self.index = index
        self.key = key
        self.data = data
        self.left: Optional["DroneNode"] = None
        self.right: Optional["DroneNode"] = None
        self.height = 1

    @property
    def order(self) -> Tuple[int, int]:
        return (self.key, self.index)

    def __repr__(self) -> str:
        return f"DroneNode(index={self.index!r}, key={self.key!r}, data={self.data!r})"


@dataclass
class TreeCounters:
    inserts: int = 0
    updates: int = 0
    finds: int = 0
    checks: int = 0
    descents: int = 0

    def as_ops(self) -> Dict[str, int]:
        ops = asdict(self)
        del ops["checks"]
        return ops


def _height(node: Optional[DroneNode]) -> int:
    return node.height if node is not None else 0


def _refresh(node: DroneNode) -> None:
    node.height = 1 + max(_height(node.left), _height(node.right))


def _rotate_right(y: DroneNode) -> DroneNode:
    x = y.left
    y.left = x.right
    x.right = y
    _refresh(y)
    _refresh(x)
    return x


def _rotate_left(x: DroneNode) -> DroneNode:
    y = x.right
    x.right = y.left
    y.left = x
    _refresh(x)
    _refresh(y)
    return y


def _rebalance(node: DroneNode) -> DroneNode:
    _refresh(node)
    balance = _height(node.left) - _height(node.right)
    if balance > 1:
        if _height(node.left.left) < _height(node.left.right):
            node.left = _rotate_left(node.left)
        return _rotate_right(node)
    if balance < -1:
        if _height(node.right.right) < _height(node.right.left):
            node.right = _rotate_right(node.right)
        return _rotate_left(node)
    return node


def _precedes(key: int, index: int, node: DroneNode) -> bool:
    return key < node.key or (key == node.key and index < node.index)


def _retrace(path: List[DroneNode], root: DroneNode) -> DroneNode:
    """Rebalance bottom-up along `path`; stop once a subtree keeps its height."""
    for pos in range(len(path) - 1, -1, -1):
        node = path[pos]
        old_height = node.height
        top = _rebalance(node)
        if pos == 0:
            root = top
        elif top is not node:
            parent = path[pos - 1]
            if parent.left is node:
                parent.left = top
            else:
                parent.right = top
        if top.height == old_height:
            break
    return root


def _insert(root: Optional[DroneNode], node: DroneNode) -> DroneNode:
    if root is None:
        return node
    path = []
    cur = root
    while True:
        path.append(cur)
        if _precedes(node.key, node.index, cur):
            if cur.left is None:
                cur.left = node
                break
            cur = cur.left
        else:
            if cur.right is None:
                cur.right = node
                break
            cur = cur.right
    return _retrace(path, root)


def _delete(root: Optional[DroneNode], node: DroneNode) -> Optional[DroneNode]:
    path: List[DroneNode] = []
    cur = root
    while cur is not node:
        if cur is None:
            raise SolverInvariantError(f"drone {node.index} not found in tree")
        path.append(cur)
        cur = cur.left if _precedes(node.key, node.index, cur) else cur.right

    below: List[DroneNode] = []
    if node.left is None or node.right is None:
        replacement = node.left if node.left is not None else node.right
    else:
        # splice the in-order successor into the deleted node's place
        replacement = node.right
        while replacement.left is not None:
            below.append(replacement)
            replacement = replacement.left
        if below:
            below[-1].left = replacement.right
            replacement.right = node.right
        replacement.left = node.left
        replacement.height = node.height

    if not path:
        root = replacement
    elif path[-1].left is node:
        path[-1].left = replacement
    else:
        path[-1].right = replacement

    if node.left is not None and node.right is not None:
        path = path + [replacement] + below
    if not path:
        return root
    return _retrace(path, root)


class _AVLTree:
    """Balanced ordered tree of DroneNodes, nodes relinked in place (never copied)."""

    def __init__(self, audit: Optional[bool] = None):
        self.root: Optional[DroneNode] = None
        self.counters = TreeCounters()
        self.audit_enabled = TREE_AUDIT if audit is None else audit
        self._nodes: Dict[int, DroneNode] = {}

    @property
    def size(self) -> int:
        return len(self._nodes)

    @property
    def height(self) -> int:
        return _height(self.root)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, index: object) -> bool:
        return index in self._nodes

    def node(self, index: int) -> DroneNode:
        try:
            return self._nodes[index]
        except KeyError:
            raise SolverInvariantError(f"drone {index} is not in the tree") from None

    def _insert_node(self, index: int, key: int, data: Optional[int]) -> DroneNode:
        if index in self._nodes:
            raise SolverInvariantError(f"drone {index} already in the tree")
        node = DroneNode(index, key, data)
        self.root = _insert(self.root, node)
        self._nodes[index] = node
        self.counters.inserts += 1
        self._after_mutation()
        return node

    def _update_node(self, node: DroneNode, new_key: int, new_data: Optional[int]) -> DroneNode:
        if self._nodes.get(node.index) is not node:
            raise SolverInvariantError(f"drone {node.index} is not in the tree")
        if new_key > node.key:
            raise SolverInvariantError(
                f"drone {node.index}: remaining capacity can only shrink ({node.key} -> {new_key})"
            )
        # the key moves, so delete and reinsert the same node
        self.root = _delete(self.root, node)
        node.key, node.data = new_key, new_data
        node.left = node.right = None
        node.height = 1
        self.root = _insert(self.root, node)
        self.counters.updates += 1
        self._after_mutation()
        return node

    def reverse_inorder(self) -> Iterator[DroneNode]:
        """Nodes in strictly decreasing (key, index) order."""
        stack: List[DroneNode] = []
        node = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.right
            node = stack.pop()
            yield node
            node = node.left

    def dump(self) -> List[Tuple[int, int, Optional[int]]]:
        return [(n.index, n.key, n.data) for n in self.reverse_inorder()]

    def _after_mutation(self) -> None:
        if self.audit_enabled:
            self.audit()

    def audit(self) -> None:
        """Check search order, stored heights, AVL balance and the height bound."""

        def walk(node: Optional[DroneNode], low, high) -> int:
            if node is None:
                return 0
            if (low is not None and node.order <= low) or (high is not None and node.order >= high):
                raise SolverInvariantError(f"search order broken at drone {node.index}")
            hl = walk(node.left, low, node.order)
            hr = walk(node.right, node.order, high)
            if abs(hl - hr) > 1:
                raise SolverInvariantError(f"unbalanced at drone {node.index}")
            if node.height != 1 + max(hl, hr):
                raise SolverInvariantError(f"stale height at drone {node.index}")
            return node.height

        height = walk(self.root, None, None)
        if self.size and height > HEIGHT_FACTOR * math.log2(self.size + 1):
            raise SolverInvariantError(f"height {height} too large for {self.size} nodes")


class DroneTree(_AVLTree):
    """Open drones keyed by remaining capacity, augmented with max rendezvous."""

    def insert(self, index: int, key: int, data: int) -> DroneNode:
        return self._insert_node(index, key, data)

    def update(self, node: DroneNode, new_key: int, new_data: int) -> DroneNode:
        if new_data < node.data:
            raise SolverInvariantError(
                f"drone {node.index}: max rendezvous can only grow ({node.data} -> {new_data})"
            )
        return self._update_node(node, new_key, new_data)


class ClassTree(_AVLTree):
    """Drones of one color class; no rendezvous data needed."""

    def insert(self, index: int, key: int) -> DroneNode:
        return self._insert_node(index, key, None)

    def update(self, node: DroneNode, new_key: int) -> DroneNode:
        return self._update_node(node, new_key, None)


@dataclass
class ProbeBudget:
    """d_j: how many more nodes the search may check for one delivery."""
    remaining: int

    @classmethod
    def for_conflicts(cls, conflicts: int) -> "ProbeBudget":
        return cls(remaining=conflicts + 1)


class Decision(enum.Enum):
    ASSIGN = "assign"
    STOP_SEARCH = "stop"
    CONTINUE = "continue"


def check(node: DroneNode, j: Delivery, budget: ProbeBudget) -> Decision:
    """
    Deliveries arrive in launch order, so data < launch means every delivery
    already on the drone ends before j starts.
    """
    if node.key >= j.cost and node.data < j.launch:
        return Decision.ASSIGN
    if node.key < j.cost:
        # every node later in reverse in-order has key <= this one
        budget.remaining = 0
        return Decision.STOP_SEARCH
    budget.remaining -= 1
    return Decision.CONTINUE


def find_feasible(
    tree: DroneTree,
    j: Delivery,
    budget: ProbeBudget,
    trace: Optional[List[Tuple[int, Decision]]] = None,
) -> Optional[DroneNode]:
    """
    Reverse in-order search for the feasible drone of largest (key, index).
    Returns None on StopSearch, when the probe budget hits zero after a
    failed check, or when the tree is exhausted.
    """
    counters = tree.counters
    counters.finds += 1

    def visit(node: Optional[DroneNode]) -> Optional[DroneNode]:
        if node is None:
            return None
        counters.descents += 1
        found = visit(node.right)
        if found is not None:
            return found
        if budget.remaining == 0:
            return None
        decision = check(node, j, budget)
        counters.checks += 1
        if trace is not None:
            trace.append((node.index, decision))
        if decision is Decision.ASSIGN:
            return node
        if budget.remaining == 0:
            return None
        return visit(node.left)

    return visit(tree.root)


def find_max_key(tree: ClassTree, cost: int) -> Optional[DroneNode]:
    """The drone with most remaining capacity, if it can take `cost`."""
    tree.counters.finds += 1
    node = tree.root
    if node is None:
        return None
    while node.right is not None:
        tree.counters.descents += 1
        node = node.right
    tree.counters.checks += 1
    return node if node.key >= cost else None
