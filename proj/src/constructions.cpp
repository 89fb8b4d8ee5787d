#include "classprod/constructions.hpp"

#include <cctype>
#include <charconv>

#include "classprod/arith.hpp"
#include "classprod/errors.hpp"
#include "classprod/group_io.hpp"

namespace classprod {

namespace {
  void require_positive(std::size_t n, char const* what) {
    if (n == 0) {
      throw BadSpec(std::string(what) + " requires n >= 1");
    }
  }

  void require_cap(std::size_t order, std::size_t max_order,
                   std::string const& what) {
    if (order > max_order) {
      throw OrderExceeded(what + " has order " + std::to_string(order)
                          + ", above the order cap of "
                          + std::to_string(max_order));
    }
  }

  std::size_t factorial_capped(std::size_t n, std::size_t cap) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) {
      f *= k;
      if (f > cap) {
        return cap + 1;
      }
    }
    return f;
  }

  Permutation long_cycle(std::size_t n, std::size_t degree) {
    std::vector<Permutation::point_type> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<Permutation::point_type>(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = static_cast<Permutation::point_type>((i + 1) % n);
    }
    return Permutation::from_images(std::move(images));
  }
}  // namespace

FiniteGroup cyclic(std::size_t n, std::size_t max_order) {
  require_positive(n, "cyclic");
  require_cap(n, max_order, "cyclic:" + std::to_string(n));
  return close_from_generators({long_cycle(n, n)}, max_order,
                               "cyclic:" + std::to_string(n));
}

FiniteGroup dihedral(std::size_t n, std::size_t max_order) {
  require_positive(n, "dihedral");
  std::string id = "dihedral:" + std::to_string(n);
  require_cap(2 * n, max_order, id);
  if (n == 1) {
    return close_from_generators({Permutation::from_cycles("(1 2)", 2)},
                                 max_order, id);
  }
  if (n == 2) {
    return close_from_generators({Permutation::from_cycles("(1 2)", 4),
                                  Permutation::from_cycles("(3 4)", 4)},
                                 max_order, id);
  }
  std::vector<Permutation::point_type> reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    reflection[i] = static_cast<Permutation::point_type>((n - i) % n);
  }
  return close_from_generators(
      {long_cycle(n, n), Permutation::from_images(std::move(reflection))},
      max_order, id);
}

FiniteGroup symmetric(std::size_t n, std::size_t max_order) {
  require_positive(n, "sym");
  std::string id = "sym:" + std::to_string(n);
  require_cap(factorial_capped(n, max_order), max_order, id);
  if (n == 1) {
    return close_from_generators({Permutation(1)}, max_order, id);
  }
  if (n == 2) {
    return close_from_generators({Permutation::from_cycles("(1 2)", 2)},
                                 max_order, id);
  }
  return close_from_generators(
      {long_cycle(n, n), Permutation::from_cycles("(1 2)", n)}, max_order, id);
}

FiniteGroup alternating(std::size_t n, std::size_t max_order) {
  require_positive(n, "alt");
  std::string id = "alt:" + std::to_string(n);
  if (n >= 2) {
    std::size_t f = factorial_capped(n, 2 * max_order);
    require_cap(f > 2 * max_order ? max_order + 1 : f / 2, max_order, id);
  }
  if (n < 3) {
    return close_from_generators({Permutation(n)}, max_order, id);
  }
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) {
    gens.push_back(Permutation::from_cycles(
        "(1 2 " + std::to_string(k) + ")", n));
  }
  return close_from_generators(gens, max_order, id);
}

FiniteGroup quaternion8() {
  auto perm = close_from_generators(
      {Permutation::from_cycles("(1 2 3 4)(5 6 7 8)", 8),
       Permutation::from_cycles("(1 5 3 7)(2 8 4 6)", 8)},
      8, "q8");
  index_t const i = perm.generators()[0];
  index_t const j = perm.generators()[1];
  index_t const k = perm.product(i, j);

  std::vector<std::string> names(8);
  names[0]                     = "1";
  names[perm.power(i, 2)]      = "-1";
  names[i]                     = "i";
  names[perm.inverse(i)]       = "-i";
  names[j]                     = "j";
  names[perm.inverse(j)]       = "-j";
  names[k]                     = "k";
  names[perm.inverse(k)]       = "-k";

  GroupTable t;
  t.order = 8;
  for (auto const& row : perm.cayley_table()) {
    t.table.insert(t.table.end(), row.begin(), row.end());
  }
  t.names      = std::move(names);
  t.generators = {i, j};
  return FiniteGroup::from_trusted_table(std::move(t), "q8");
}

FiniteGroup extraspecial_p3(std::size_t p, std::size_t max_order) {
  if (p == 2 || !is_prime(p)) {
    throw NotOddPrime("extraspecial groups of exponent p need an odd prime p, got "
                      + std::to_string(p));
  }
  std::size_t const n = p * p * p;
  require_cap(n, max_order, "es:" + std::to_string(p));
  GroupTable t;
  t.order = n;
  t.table.resize(n * n);
  auto index = [p](std::size_t a, std::size_t b, std::size_t c) {
    return static_cast<index_t>((a % p) * p * p + (b % p) * p + (c % p));
  };
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      t.table[x * n + y] = index(a + a2, b + b2, c + c2 + a * b2);
    }
    t.names.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ","
                      + std::to_string(c) + ")");
  }
  t.generators = {index(1, 0, 0), index(0, 1, 0)};
  return FiniteGroup::from_trusted_table(std::move(t), "es:" + std::to_string(p));
}

index_t pair_index(FiniteGroup const& K, index_t x, index_t y) noexcept {
  return static_cast<index_t>(x * K.order() + y);
}

FiniteGroup direct_product(FiniteGroup const& G, FiniteGroup const& K,
                           std::size_t max_order) {
  std::size_t const m = G.order(), k = K.order();
  std::string       id = "prod(" + G.id() + "," + K.id() + ")";
  if (m > max_order || k > max_order || m * k > max_order) {
    throw OrderExceeded(id + " has order " + std::to_string(m * k)
                        + ", above the order cap of "
                        + std::to_string(max_order));
  }
  std::size_t const n = m * k;
  GroupTable        t;
  t.order = n;
  t.table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    index_t const x1 = static_cast<index_t>(x / k), x2 = static_cast<index_t>(x % k);
    index_t*      row = t.table.data() + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      index_t const y1 = static_cast<index_t>(y / k), y2 = static_cast<index_t>(y % k);
      row[y] = static_cast<index_t>(G.product(x1, y1) * k + K.product(x2, y2));
    }
    t.names.push_back("(" + G.name(x1) + "," + K.name(x2) + ")");
  }
  for (auto g : G.generators()) {
    t.generators.push_back(pair_index(K, g, 0));
  }
  for (auto g : K.generators()) {
    t.generators.push_back(pair_index(K, 0, g));
  }
  return FiniteGroup::from_trusted_table(std::move(t), std::move(id));
}

Eta1Witness odd_eta1_witness(std::size_t n, std::size_t max_order) {
  if (n == 0 || n % 2 == 0) {
    throw EvenN("odd_eta1_witness needs an odd n >= 1, got "
                + std::to_string(n));
  }
  FiniteGroup G;
  index_t     a = 0;
  GroupSpec   spec{GroupKind::direct_product, 0, {}, {}};
  std::size_t order = 1;
  for (auto [p, e] : factorize(n)) {
    for (std::size_t i = 0; i < e; ++i) {
      order *= p * p * p;
      spec.factors.push_back(GroupSpec{GroupKind::extraspecial_p3, p, {}, {}});
    }
  }
  require_cap(order, max_order, "odd_eta1_witness(" + std::to_string(n) + ")");
  for (auto const& f : spec.factors) {
    FiniteGroup E = extraspecial_p3(f.parameter, max_order);
    // (1,0,0) has index p^2.
    index_t e1 = static_cast<index_t>(f.parameter * f.parameter);
    if (G.order() == 1) {
      G = E;
      a = e1;
    } else {
      a = pair_index(E, a, e1);
      G = direct_product(G, E, max_order);
    }
  }
  if (spec.factors.size() == 1) {
    spec = spec.factors.front();
  } else if (spec.factors.empty()) {
    spec = GroupSpec{GroupKind::cyclic, 1, {}, {}};
  }
  G = G.with_id(spec.to_string());
  return Eta1Witness{G, G.element(a)};
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case GroupKind::cyclic:
      return "cyclic:" + std::to_string(parameter);
    case GroupKind::dihedral:
      return "dihedral:" + std::to_string(parameter);
    case GroupKind::symmetric:
      return "sym:" + std::to_string(parameter);
    case GroupKind::alternating:
      return "alt:" + std::to_string(parameter);
    case GroupKind::quaternion8:
      return "q8";
    case GroupKind::extraspecial_p3:
      return "es:" + std::to_string(parameter);
    case GroupKind::from_file:
      return "file:" + path;
    case GroupKind::direct_product: {
      bool uniform = factors.size() > 1;
      for (auto const& f : factors) {
        uniform = uniform && f == factors.front()
                  && f.kind != GroupKind::direct_product
                  && f.kind != GroupKind::from_file;
      }
      if (uniform) {
        return factors.front().to_string() + "^" + std::to_string(factors.size());
      }
      std::string out = "prod(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i ? "," : "") + factors[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

namespace {
  class SpecParser {
   public:
    explicit SpecParser(std::string_view text) : _text(text) {}

    GroupSpec parse() {
      GroupSpec spec = parse_one(false);
      skip_space();
      if (_pos != _text.size()) {
        fail("unexpected trailing text");
      }
      return spec;
    }

   private:
    [[noreturn]] void fail(std::string const& why) const {
      throw BadSpec("bad group spec \"" + std::string(_text) + "\": " + why);
    }

    void skip_space() {
      while (_pos < _text.size()
             && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
    }

    bool accept(std::string_view word) {
      if (_text.substr(_pos, word.size()) == word) {
        _pos += word.size();
        return true;
      }
      return false;
    }

    std::size_t number() {
      skip_space();
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(_text.data() + _pos,
                                       _text.data() + _text.size(), value);
      if (ec != std::errc()) {
        fail("expected a number at position " + std::to_string(_pos));
      }
      _pos = static_cast<std::size_t>(ptr - _text.data());
      return value;
    }

    GroupSpec parse_one(bool nested) {
      skip_space();
      GroupSpec spec;
      if (accept("prod(")) {
        spec.kind = GroupKind::direct_product;
        while (true) {
          spec.factors.push_back(parse_one(true));
          skip_space();
          if (accept(")")) {
            break;
          }
          if (!accept(",")) {
            fail("expected ',' or ')' in prod(...)");
          }
        }
        if (spec.factors.size() == 1) {
          spec = GroupSpec(spec.factors.front());
        }
      } else if (accept("file:")) {
        spec.kind    = GroupKind::from_file;
        auto stop    = nested ? _text.find_first_of(",)", _pos) : _text.size();
        stop         = stop == std::string_view::npos ? _text.size() : stop;
        spec.path    = std::string(_text.substr(_pos, stop - _pos));
        _pos         = stop;
        if (spec.path.empty()) {
          fail("empty file path");
        }
        return spec;
      } else if (accept("q8")) {
        spec.kind = GroupKind::quaternion8;
      } else {
        if (accept("cyclic:")) {
          spec.kind = GroupKind::cyclic;
        } else if (accept("dihedral:") || accept("dih:")) {
          spec.kind = GroupKind::dihedral;
        } else if (accept("sym:")) {
          spec.kind = GroupKind::symmetric;
        } else if (accept("alt:")) {
          spec.kind = GroupKind::alternating;
        } else if (accept("es:")) {
          spec.kind = GroupKind::extraspecial_p3;
        } else {
          fail("unknown group kind");
        }
        spec.parameter = number();
        if (spec.kind == GroupKind::extraspecial_p3) {
          if (spec.parameter == 2 || !is_prime(spec.parameter)) {
            throw NotOddPrime("bad group spec \"" + std::string(_text)
                              + "\": es:p needs an odd prime p");
          }
        } else if (spec.parameter == 0) {
          fail("parameter must be >= 1");
        }
      }
      skip_space();
      if (accept("^")) {
        std::size_t copies = number();
        if (copies == 0) {
          fail("power must be >= 1");
        }
        if (copies > 1) {
          GroupSpec power;
          power.kind = GroupKind::direct_product;
          power.factors.assign(copies, spec);
          spec = std::move(power);
        }
      }
      return spec;
    }

    std::string_view _text;
    std::size_t      _pos = 0;
  };
}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  return SpecParser(text).parse();
}

FiniteGroup build_group(GroupSpec const& spec, std::size_t max_order) {
  FiniteGroup G;
  switch (spec.kind) {
    case GroupKind::cyclic:
      G = cyclic(spec.parameter, max_order);
      break;
    case GroupKind::dihedral:
      G = dihedral(spec.parameter, max_order);
      break;
    case GroupKind::symmetric:
      G = symmetric(spec.parameter, max_order);
      break;
    case GroupKind::alternating:
      G = alternating(spec.parameter, max_order);
      break;
    case GroupKind::quaternion8:
      require_cap(8, max_order, "q8");
      G = quaternion8();
      break;
    case GroupKind::extraspecial_p3:
      G = extraspecial_p3(spec.parameter, max_order);
      break;
    case GroupKind::from_file:
      G = load_group_file(spec.path, spec.to_string(), max_order);
      break;
    case GroupKind::direct_product: {
      if (spec.factors.empty()) {
        throw BadSpec("direct product with no factors");
      }
      G = build_group(spec.factors.front(), max_order);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        G = direct_product(G, build_group(spec.factors[i], max_order), max_order);
      }
      break;
    }
  }
  return G.with_id(spec.to_string());
}

FiniteGroup build_group(std::string_view spec, std::size_t max_order) {
  return build_group(parse_group_spec(spec), max_order);
}

}  // namespace classprod
