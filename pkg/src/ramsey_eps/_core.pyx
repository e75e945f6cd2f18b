# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled implementation of the hot paths.

Mirrors ``_core_py`` function for function; see that module for the
documentation.  Masks that fit in 63 bits are built with C integers,
longer ones fall back to Python integers.
"""

from libc.stdint cimport uint64_t

from .errors import BudgetExceeded, InternalInvariantViolation

MASK64 = (1 << 64) - 1
cdef object _ONE = 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


cdef inline uint64_t _mix(uint64_t z) nogil:
    z = z + <uint64_t>0x9E3779B97F4A7C15
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


def splitmix64(z):
    return _mix(<uint64_t>(z & MASK64))


cdef inline int _seeded(uint64_t key, uint64_t lo, uint64_t hi) nogil:
    return <int>(_mix(_mix(key ^ lo) ^ hi) & 1)


def seeded_colour(key, lo, hi):
    return _seeded(<uint64_t>(key & MASK64), <uint64_t>(lo & MASK64), <uint64_t>(hi & MASK64))


def strip(play):
    cdef tuple t = tuple(play)
    cdef Py_ssize_t end = len(t)
    while end and t[end - 1] == 0:
        end -= 1
    return t[:end]


def zeros_mask(s):
    cdef Py_ssize_t i, n
    cdef uint64_t m = 0
    cdef tuple t = tuple(s)
    n = len(t)
    if n <= 63:
        for i in range(n):
            if t[i] == 0:
                m |= (<uint64_t>1) << i
        return m
    big = 0
    for i in range(n):
        if t[i] == 0:
            big |= _ONE << i
    return big


def prefix_zero_masks(alpha, Py_ssize_t n):
    cdef list out = [0]
    cdef tuple a = tuple(alpha)
    cdef Py_ssize_t i, la = len(a)
    cdef uint64_t m = 0
    if n <= 63:
        for i in range(n):
            if i >= la or a[i] == 0:
                m |= (<uint64_t>1) << i
            out.append(m)
        return out
    big = 0
    for i in range(n):
        if i >= la or a[i] == 0:
            big |= _ONE << i
        out.append(big)
    return out


def place_nodes(list pred, list children, c, Py_ssize_t stop, budget):
    cdef Py_ssize_t i, m
    cdef dict kids
    cdef uint64_t key = 0
    cdef bint seeded = False
    skey = getattr(c, "seeded_key", None)
    if skey is not None:
        key = <uint64_t>skey
        seeded = True
    for i in range(len(pred), stop):
        budget.tick(where="prec")
        m = 0
        mask = 1
        while True:
            if seeded:
                col = _seeded(key, <uint64_t>m, <uint64_t>i)
            else:
                col = c(m, i)
            kids = <dict>children[m]
            nxt = kids.get(col)
            if nxt is None:
                kids[col] = i
                break
            m = nxt
            mask |= _ONE << m  # Python integer: masks grow past 64 bits
        pred.append(mask)
        children.append({})


def last_extending(has_witness, list masks, Py_ssize_t W, bound):
    cdef Py_ssize_t lo, hi, mid
    if W <= 0 or not has_witness(0, masks[0], W, bound):
        return 0
    if has_witness(W, masks[W], W, bound):
        return 0
    lo, hi = 0, W
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if has_witness(mid, masks[mid], W, bound):
            lo = mid
        else:
            hi = mid
    return W - lo - 1


cdef class ProductRun:
    cdef public object family, control, outcome, budget
    cdef public str label
    cdef public bint evict
    cdef public dict _ext, _val, _kids
    cdef public Py_ssize_t _nodes
    cdef object _node_key

    def __init__(self, family, control, outcome, budget, str label="eps", bint evict=False):
        self.family = family
        self.control = control
        self.outcome = outcome
        self.budget = budget
        self.label = label
        self.evict = evict
        self._node_key = f"{label}_nodes"
        self._ext = {}
        self._val = {}
        self._kids = {}
        self._nodes = 0

    cdef tuple _extension(self, tuple s):
        cdef tuple ext = self._ext.get(s)
        if ext is not None:
            return ext
        b = self.budget
        b.used += 1
        if b.used > b.limit:
            raise BudgetExceeded(b.limit, b.used, self.label)
        b.counters[self._node_key] += 1
        self._nodes += 1
        if self.control(s) < len(s):
            ext = ()
        else:
            a = self.family(s)(lambda x: self._child_value(s, x))
            ext = (a,) + self._extension(s + (a,))
            if self.evict:
                kids = self._kids.pop(s, None)
                if kids is not None:
                    for y in kids:
                        t = s + (y,)
                        self._ext.pop(t, None)
                        self._val.pop(t, None)
        self._ext[s] = ext
        return ext

    cdef object _child_value(self, tuple s, x):
        if self.evict:
            kids = self._kids.get(s)
            if kids is None:
                kids = self._kids[s] = set()
            kids.add(x)
        return self._value(s + (x,))

    cdef object _value(self, tuple s):
        if s in self._val:
            return self._val[s]
        v = self.outcome(s + self._extension(s))
        self._val[s] = v
        return v

    def extension(self, s):
        return self._extension(tuple(s))

    def value(self, s):
        return self._value(tuple(s))

    def continuation_value(self, s, x):
        return self._value(tuple(s) + (x,))

    def play(self, s=()):
        s = tuple(s)
        return s + self._extension(s)

    @property
    def nodes(self):
        return self._nodes


cdef class RecordingBeta:
    cdef object _b
    cdef public dict reads

    def __init__(self, b):
        self._b = b
        self.reads = {}

    def __call__(self, i):
        v = self.reads.get(i)
        if v is None:
            v = self._b(i)
            self.reads[i] = v
        return v


cdef class _Leaf:
    cdef public object result

    def __init__(self, result):
        self.result = result


cdef class _Path:
    cdef public tuple idx, vals
    cdef public object next

    def __init__(self, tuple idx, tuple vals, nxt):
        self.idx = idx
        self.vals = vals
        self.next = nxt


cdef class _Branch:
    cdef public object index
    cdef public dict kids

    def __init__(self, index, dict kids):
        self.index = index
        self.kids = kids


cdef object _make(list items, result):
    leaf = _Leaf(result)
    if not items:
        return leaf
    return _Path(tuple([p[0] for p in items]), tuple([p[1] for p in items]), leaf)


cdef class ReadTrie:
    cdef object _root
    cdef public Py_ssize_t size

    def __init__(self):
        self._root = None
        self.size = 0

    def lookup(self, b):
        cdef object node = self._root
        cdef _Path path
        cdef Py_ssize_t j
        while node is not None:
            if type(node) is _Leaf:
                return (<_Leaf>node).result
            if type(node) is _Path:
                path = <_Path>node
                for j in range(len(path.idx)):
                    if b(path.idx[j]) != path.vals[j]:
                        return None
                node = path.next
            else:
                node = (<_Branch>node).kids.get(b((<_Branch>node).index))
        return None

    def insert(self, dict reads, result):
        cdef list items = list(reads.items())
        cdef Py_ssize_t pos = 0, j, n = len(items)
        cdef _Path path
        cdef _Branch br
        self.size += 1
        if self._root is None:
            self._root = _make(items, result)
            return
        parent, slot, node = None, None, self._root
        while True:
            if type(node) is _Leaf:
                raise InternalInvariantViolation("computation read beta inconsistently")
            if type(node) is _Path:
                path = <_Path>node
                j = 0
                while j < len(path.idx):
                    if pos + j >= n or items[pos + j][0] != path.idx[j]:
                        raise InternalInvariantViolation("computation read beta inconsistently")
                    if items[pos + j][1] != path.vals[j]:
                        break
                    j += 1
                if j == len(path.idx):
                    parent, slot, node = path, "next", path.next
                    pos += j
                    continue
                rest = path.next
                if j + 1 < len(path.idx):
                    rest = _Path(path.idx[j + 1:], path.vals[j + 1:], rest)
                br = _Branch(path.idx[j], {path.vals[j]: rest})
                br.kids[items[pos + j][1]] = _make(items[pos + j + 1:], result)
                if j:
                    path.idx = path.idx[:j]
                    path.vals = path.vals[:j]
                    path.next = br
                elif parent is None:
                    self._root = br
                elif type(parent) is _Path:
                    (<_Path>parent).next = br
                else:
                    (<_Branch>parent).kids[slot] = br
                return
            br = <_Branch>node
            if pos >= n or items[pos][0] != br.index:
                raise InternalInvariantViolation("computation read beta inconsistently")
            v = items[pos][1]
            child = br.kids.get(v)
            if child is None:
                br.kids[v] = _make(items[pos + 1:], result)
                return
            parent, slot, node = br, v, child
            pos += 1
