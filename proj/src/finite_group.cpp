#include "classprod/finite_group.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "classprod/errors.hpp"

namespace classprod {

bool order_then_members_less(ElementSet const& x, ElementSet const& y) {
  std::size_t sx = x.size(), sy = y.size();
  if (sx != sy) {
    return sx < sy;
  }
  return x.members() < y.members();
}

std::size_t max_order_from_env() {
  char const* value = std::getenv("CLASSPROD_MAX_ORDER");
  if (value == nullptr) {
    return default_max_order;
  }
  std::string_view text(value);
  std::size_t      cap = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0) {
    return default_max_order;
  }
  return cap;
}

namespace {
  std::uint64_t next_token() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
  }
}  // namespace

struct FiniteGroup::Data {
  std::size_t              order = 0;
  std::vector<index_t>     table;
  std::vector<index_t>     inverse;
  std::vector<std::string> names;
  std::vector<index_t>     generators;
  std::uint64_t            token = 0;

  mutable std::once_flag classes_once;
  mutable ClassTable     classes;
};

FiniteGroup::FiniteGroup() {
  GroupTable t;
  t.order = 1;
  t.table = {0};
  *this   = from_trusted_table(std::move(t), "trivial");
}

FiniteGroup::FiniteGroup(std::shared_ptr<Data const> data, std::string id)
    : _data(std::move(data)),
      _table(_data->table.data()),
      _order(_data->order),
      _id(std::move(id)) {}

FiniteGroup FiniteGroup::from_trusted_table(GroupTable t, std::string id) {
  if (t.order == 0 || t.table.size() != t.order * t.order) {
    throw Error("group table has the wrong shape");
  }
  if (!t.names.empty() && t.names.size() != t.order) {
    throw Error("element name list does not match the group order");
  }
  auto data        = std::make_shared<Data>();
  data->order      = t.order;
  data->table      = std::move(t.table);
  data->names      = std::move(t.names);
  data->generators = std::move(t.generators);
  data->token      = next_token();
  data->inverse.assign(t.order, 0);
  for (index_t a = 0; a < t.order; ++a) {
    index_t const* row = data->table.data() + a * t.order;
    for (index_t b = 0; b < t.order; ++b) {
      if (row[b] == 0) {
        data->inverse[a] = b;
        break;
      }
    }
  }
  return FiniteGroup(std::move(data), std::move(id));
}

std::size_t FiniteGroup::order() const noexcept {
  return _order;
}

FiniteGroup FiniteGroup::with_id(std::string id) const {
  return FiniteGroup(_data, std::move(id));
}

std::uint64_t FiniteGroup::token() const noexcept {
  return _data->token;
}

Element FiniteGroup::element(index_t index) const {
  if (index >= _order) {
    throw Error("element index " + std::to_string(index) + " out of range for "
                + _id + " of order " + std::to_string(_order));
  }
  return Element{index, token()};
}

index_t FiniteGroup::inverse(index_t a) const noexcept {
  return _data->inverse[a];
}

index_t FiniteGroup::conjugate(index_t a, index_t g) const noexcept {
  return product(product(inverse(g), a), g);
}

index_t FiniteGroup::commutator(index_t a, index_t g) const noexcept {
  return product(inverse(a), conjugate(a, g));
}

index_t FiniteGroup::power(index_t a, std::int64_t k) const noexcept {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  index_t result = 0;
  while (k > 0) {
    if (k & 1) {
      result = product(result, a);
    }
    a = product(a, a);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(index_t a) const noexcept {
  std::size_t k = 1;
  index_t     x = a;
  while (x != 0) {
    x = product(x, a);
    ++k;
  }
  return k;
}

void FiniteGroup::check(Element x) const {
  if (x.token != token()) {
    throw GroupMismatch("element does not belong to group " + _id);
  }
}

void FiniteGroup::check(ElementSet const& x) const {
  if (x.token() != token()) {
    throw GroupMismatch("element set does not belong to group " + _id);
  }
}

Element FiniteGroup::mul(Element a, Element b) const {
  check(a);
  check(b);
  return Element{product(a.index, b.index), token()};
}

Element FiniteGroup::inv(Element a) const {
  check(a);
  return Element{inverse(a.index), token()};
}

Element FiniteGroup::conjugate(Element a, Element g) const {
  check(a);
  check(g);
  return Element{conjugate(a.index, g.index), token()};
}

Element FiniteGroup::commutator(Element a, Element g) const {
  check(a);
  check(g);
  return Element{commutator(a.index, g.index), token()};
}

std::size_t FiniteGroup::element_order(Element a) const {
  check(a);
  return element_order(a.index);
}

bool FiniteGroup::has_names() const noexcept {
  return !_data->names.empty();
}

std::string FiniteGroup::name(index_t a) const {
  return has_names() ? _data->names[a] : std::to_string(a);
}

std::optional<index_t> FiniteGroup::find_name(std::string_view label) const {
  for (index_t a = 0; a < _data->names.size(); ++a) {
    if (_data->names[a] == label) {
      return a;
    }
  }
  return std::nullopt;
}

std::vector<index_t> const& FiniteGroup::generators() const noexcept {
  return _data->generators;
}

ElementSet FiniteGroup::empty_set() const {
  return ElementSet(token(), _order);
}

ElementSet FiniteGroup::full_set() const {
  ElementSet s = empty_set();
  for (index_t a = 0; a < _order; ++a) {
    s.insert(a);
  }
  return s;
}

ElementSet FiniteGroup::singleton(index_t a) const {
  ElementSet s = empty_set();
  s.insert(a);
  return s;
}

ElementSet FiniteGroup::make_set(std::vector<index_t> const& members) const {
  ElementSet s = empty_set();
  for (auto a : members) {
    if (a >= _order) {
      throw Error("element index " + std::to_string(a) + " out of range");
    }
    s.insert(a);
  }
  return s;
}

ElementSet FiniteGroup::center() const {
  ElementSet z = empty_set();
  for (index_t a = 0; a < _order; ++a) {
    bool central = true;
    for (index_t g = 0; g < _order && central; ++g) {
      central = product(a, g) == product(g, a);
    }
    if (central) {
      z.insert(a);
    }
  }
  return z;
}

bool FiniteGroup::is_abelian() const {
  for (index_t a = 0; a < _order; ++a) {
    for (index_t b = a + 1; b < _order; ++b) {
      if (product(a, b) != product(b, a)) {
        return false;
      }
    }
  }
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (index_t a = 0; a < _order; ++a) {
    e = std::lcm(e, element_order(a));
  }
  return e;
}

ClassTable const& FiniteGroup::class_table() const {
  std::call_once(_data->classes_once, [this] {
    ClassTable& ct = _data->classes;
    constexpr std::uint32_t unset = ~std::uint32_t(0);
    ct.class_of.assign(_order, unset);
    for (index_t x = 0; x < _order; ++x) {
      if (ct.class_of[x] != unset) {
        continue;
      }
      auto k = static_cast<std::uint32_t>(ct.classes.size());
      std::vector<index_t> members;
      for (index_t g = 0; g < _order; ++g) {
        index_t y = conjugate(x, g);
        if (ct.class_of[y] == unset) {
          ct.class_of[y] = k;
          members.push_back(y);
        }
      }
      std::sort(members.begin(), members.end());
      ct.classes.push_back(std::move(members));
    }
  });
  return _data->classes;
}

std::vector<std::vector<index_t>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<index_t>> rows(_order);
  for (index_t a = 0; a < _order; ++a) {
    rows[a].assign(_table + a * _order, _table + (a + 1) * _order);
  }
  return rows;
}

FiniteGroup close_from_generators(std::vector<Permutation> const& gens,
                                  std::size_t                     max_order,
                                  std::string                     id) {
  if (gens.empty()) {
    throw InvalidPermutation("at least one generator is required");
  }
  std::size_t const degree = gens.front().degree();
  for (auto const& g : gens) {
    if (g.degree() != degree) {
      throw InvalidPermutation("generators have different degrees");
    }
    // Re-validate: callers may have built the permutation by hand.
    Permutation::from_images(g.images());
  }

  std::size_t const k = gens.size();
  std::unordered_map<Permutation, index_t, PermutationHash> index_of;
  std::vector<Permutation> elements;
  std::vector<index_t>     right;  // right[x * k + j] = x * gens[j]
  std::vector<index_t>     parent;
  std::vector<index_t>     via;

  elements.emplace_back(degree);
  index_of.emplace(elements.front(), 0);
  parent.push_back(0);
  via.push_back(0);

  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation y  = elements[x] * gens[j];
      auto [it, new_] = index_of.emplace(y, static_cast<index_t>(elements.size()));
      if (new_) {
        if (elements.size() + 1 > max_order) {
          throw OrderExceeded("closure exceeds the order cap of "
                              + std::to_string(max_order));
        }
        elements.push_back(std::move(y));
        parent.push_back(static_cast<index_t>(x));
        via.push_back(static_cast<index_t>(j));
      }
      right.push_back(it->second);
    }
  }

  std::size_t const n = elements.size();
  GroupTable        t;
  t.order = n;
  t.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    index_t* row = t.table.data() + a * n;
    row[0]       = static_cast<index_t>(a);
    // Every nonidentity element i is parent[i] * gens[via[i]], with
    // parent[i] < i, so a*i = (a*parent[i]) * gens[via[i]].
    for (std::size_t i = 1; i < n; ++i) {
      row[i] = right[row[parent[i]] * k + via[i]];
    }
  }
  t.names.reserve(n);
  for (auto const& p : elements) {
    t.names.push_back(p.to_cycles());
  }
  for (auto const& g : gens) {
    t.generators.push_back(index_of.at(g));
  }
  return FiniteGroup::from_trusted_table(std::move(t), std::move(id));
}

FiniteGroup from_cayley_table(std::vector<std::vector<index_t>> const& table,
                              std::string                              id,
                              std::size_t max_order) {
  std::size_t const n = table.size();
  if (n == 0) {
    throw ParseError("Cayley table is empty");
  }
  if (n > max_order) {
    throw OrderExceeded("Cayley table of order " + std::to_string(n)
                        + " exceeds the order cap of "
                        + std::to_string(max_order));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw ParseError("Cayley table row " + std::to_string(i) + " has "
                       + std::to_string(table[i].size()) + " entries, expected "
                       + std::to_string(n));
    }
    for (auto v : table[i]) {
      if (v >= n) {
        throw ParseError("Cayley table entry " + std::to_string(v)
                         + " out of range in row " + std::to_string(i));
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      index_t ab = table[a][b];
      for (std::size_t c = 0; c < n; ++c) {
        if (table[ab][c] != table[a][table[b][c]]) {
          throw NotAssociative("(" + std::to_string(a) + "*" + std::to_string(b)
                               + ")*" + std::to_string(c) + " != "
                               + std::to_string(a) + "*(" + std::to_string(b)
                               + "*" + std::to_string(c) + ")");
        }
      }
    }
  }

  std::optional<index_t> e;
  for (index_t cand = 0; cand < n && !e; ++cand) {
    bool ok = true;
    for (index_t x = 0; x < n && ok; ++x) {
      ok = table[cand][x] == x && table[x][cand] == x;
    }
    if (ok) {
      e = cand;
    }
  }
  if (!e) {
    throw NoIdentity("no two-sided identity in Cayley table of order "
                     + std::to_string(n));
  }

  for (index_t x = 0; x < n; ++x) {
    bool found = false;
    for (index_t y = 0; y < n && !found; ++y) {
      found = table[x][y] == *e && table[y][x] == *e;
    }
    if (!found) {
      throw NoInverse("element " + std::to_string(x)
                      + " has no two-sided inverse");
    }
  }

  // Identity first, remaining elements in table order.
  std::vector<index_t> old_of(n), new_of(n);
  old_of[0] = *e;
  for (index_t x = 0, next = 1; x < n; ++x) {
    if (x != *e) {
      old_of[next++] = x;
    }
  }
  for (index_t i = 0; i < n; ++i) {
    new_of[old_of[i]] = i;
  }
  GroupTable t;
  t.order = n;
  t.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      t.table[i * n + j] = new_of[table[old_of[i]][old_of[j]]];
    }
  }
  return FiniteGroup::from_trusted_table(std::move(t), std::move(id));
}

}  // namespace classprod
