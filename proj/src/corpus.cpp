#include "smoothloc/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

namespace smoothloc {

namespace {

constexpr int kMaxFrameSize = 16;
constexpr int kMaxSemilatticeSize = 7;
constexpr int kMaxTopologyPoints = 4;

std::string dedupe_key(const FinitePoset& p) {
  if (p.size() <= 8) return canonical_form(p);
  return "h" + std::to_string(invariant_hash(p));
}

// Keeps the first representative of every isomorphism class.
class IsoIndex {
 public:
  bool insert(const FinitePoset& p) {
    auto& bucket = buckets_[dedupe_key(p)];
    for (const FinitePoset& q : bucket)
      if (isomorphic(p, q)) return false;
    bucket.push_back(p);
    return true;
  }

 private:
  std::map<std::string, std::vector<FinitePoset>> buckets_;
};

int count_downsets(const FinitePoset& P) {
  int count = 0;
  for_each_subset(P.all(), [&](ElementSet s) {
    for (int x : s)
      if (!P.down(x).subset_of(s)) return;
    ++count;
  });
  return count;
}

FinitePoset labelled_downsets(const FinitePoset& P, char first_letter) {
  std::vector<ElementSet> sets;
  for_each_subset(P.all(), [&](ElementSet s) {
    for (int x : s)
      if (!P.down(x).subset_of(s)) return;
    sets.push_back(s);
  });
  std::sort(sets.begin(), sets.end(), [](ElementSet x, ElementSet y) {
    return x.size() != y.size() ? x.size() < y.size() : x.bits() < y.bits();
  });
  std::vector<std::string> labels;
  for (ElementSet s : sets) {
    if (s.empty()) {
      labels.push_back("0");
    } else if (s == P.all()) {
      labels.push_back("1");
    } else {
      std::string l;
      for (int x : s) {
        ElementSet above = P.up(x) & s;
        if (above.size() == 1) l += static_cast<char>(first_letter + x);
      }
      labels.push_back(l);
    }
  }
  const int n = static_cast<int>(sets.size());
  return FinitePoset::from_relation(
      n, [&](int i, int j) { return sets[i].subset_of(sets[j]); }, std::move(labels));
}

}  // namespace

FinitePoset downset_lattice(const FinitePoset& P) { return labelled_downsets(P, 'a'); }

FinitePoset chain_poset(int n) {
  if (n < 1) throw InvalidPoset("a chain needs at least one element");
  if (n == 1) return FinitePoset::from_covers(1, {}, {"1"});
  std::vector<Cover> covers;
  std::vector<std::string> labels{"0"};
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  for (int i = 1; i + 1 < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  labels.push_back("1");
  return FinitePoset::from_covers(n, covers, std::move(labels));
}

FinitePoset boolean_poset(int atoms) {
  if (atoms < 0 || atoms > 6) throw SizeCapExceeded("Boolean algebra atoms", atoms, 6);
  return labelled_downsets(FinitePoset::from_covers(atoms, {}), 'p');
}

FinitePoset product_poset(const FinitePoset& a, const FinitePoset& b) {
  const int n = a.size() * b.size();
  if (n > ElementSet::kCapacity) throw SizeCapExceeded("product", n, ElementSet::kCapacity);
  std::vector<std::string> labels;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  const int m = b.size();
  return FinitePoset::from_relation(
      n, [&](int x, int y) { return a.leq(x / m, y / m) && b.leq(x % m, y % m); }, std::move(labels));
}

std::vector<FinitePoset> topology_frames(int points) {
  if (points < 1 || points > kMaxTopologyPoints) throw SpecTooLarge("topologies need 1 to 4 points");
  const int full = (1 << points) - 1;
  std::vector<int> middle;
  for (int s = 1; s < full; ++s) middle.push_back(s);
  std::vector<FinitePoset> out;
  const int m = static_cast<int>(middle.size());
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<int> opens{0};
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) opens.push_back(middle[i]);
    opens.push_back(full);
    std::vector<bool> member(full + 1, false);
    for (int o : opens) member[o] = true;
    bool closed = true;
    for (int x : opens) {
      for (int y : opens)
        if (!member[x | y] || !member[x & y]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) continue;
    std::sort(opens.begin(), opens.end(), [](int x, int y) {
      const int px = __builtin_popcount(x), py = __builtin_popcount(y);
      return px != py ? px < py : x < y;
    });
    std::vector<std::string> labels;
    for (int o : opens) {
      if (o == 0) {
        labels.push_back("0");
      } else if (o == full) {
        labels.push_back("1");
      } else {
        std::string l;
        for (int p = 0; p < points; ++p)
          if ((o >> p) & 1) l += static_cast<char>('a' + p);
        labels.push_back(l);
      }
    }
    const int n = static_cast<int>(opens.size());
    out.push_back(FinitePoset::from_relation(
        n, [&](int i, int j) { return (opens[i] & ~opens[j]) == 0; }, std::move(labels)));
  }
  return out;
}

std::vector<FinitePoset> enumerate_posets(int n, const std::function<bool(const FinitePoset&)>& keep) {
  std::vector<FinitePoset> level{FinitePoset::from_covers(0, {})};
  for (int size = 1; size <= n; ++size) {
    std::vector<FinitePoset> next;
    IsoIndex seen;
    for (const FinitePoset& P : level) {
      for_each_subset(P.all(), [&](ElementSet below) {
        for (int x : below)
          if (!P.down(x).subset_of(below)) return;
        std::vector<ElementSet> up(size);
        for (int x = 0; x + 1 < size; ++x) {
          up[x] = P.up(x);
          if (below.contains(x)) up[x].insert(size - 1);
        }
        up[size - 1] = ElementSet::single(size - 1);
        FinitePoset grown = FinitePoset::from_up_sets(std::move(up));
        if (keep && !keep(grown)) return;
        if (seen.insert(grown)) next.push_back(std::move(grown));
      });
    }
    level = std::move(next);
  }
  return level;
}

std::optional<FinitePoset> builtin_poset(const std::string& name) {
  auto x = name.find('x');
  if (x != std::string::npos) {
    auto a = builtin_poset(name.substr(0, x));
    auto b = builtin_poset(name.substr(x + 1));
    if (!a || !b) return std::nullopt;
    return product_poset(*a, *b);
  }
  if (name == "2") return chain_poset(2);
  if (name.size() < 2 || (name[0] != 'C' && name[0] != 'B')) return std::nullopt;
  int k = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    k = k * 10 + (c - '0');
    if (k > 64) return std::nullopt;
  }
  if (name[0] == 'C') return k >= 1 ? std::optional(chain_poset(k)) : std::nullopt;
  return k <= 6 ? std::optional(boolean_poset(k)) : std::nullopt;
}

std::vector<CorpusFrame> gen_frames(const CorpusSpec& spec) {
  if (spec.max_frame_size < 1 || spec.max_frame_size > kMaxFrameSize)
    throw SpecTooLarge("max frame size must lie in 1.." + std::to_string(kMaxFrameSize));
  if (spec.max_topology_points > kMaxTopologyPoints)
    throw SpecTooLarge("topologies are generated on at most " + std::to_string(kMaxTopologyPoints) + " points");

  std::vector<CorpusFrame> out;
  IsoIndex seen;
  auto add = [&](const FinitePoset& p, const std::string& name, const std::string& source) {
    if (!seen.insert(p)) return;
    out.push_back({name, source, std::make_shared<const FiniteFrame>(build_frame(p, name))});
  };

  if (spec.chains)
    for (int n = 2; n <= spec.max_frame_size; ++n) add(chain_poset(n), "C" + std::to_string(n), "chain");
  if (spec.booleans)
    for (int k = 1; (1 << k) <= spec.max_frame_size; ++k) add(boolean_poset(k), "B" + std::to_string(k), "boolean");
  if (spec.products) {
    for (bool grew = true; grew;) {
      grew = false;
      const std::size_t before = out.size();
      for (std::size_t i = 0; i < before; ++i)
        for (std::size_t j = i; j < before; ++j) {
          const FiniteFrame& a = *out[i].frame;
          const FiniteFrame& b = *out[j].frame;
          if (a.size() < 2 || b.size() < 2 || a.size() * b.size() > spec.max_frame_size) continue;
          const std::size_t had = out.size();
          add(product_poset(a.poset(), b.poset()), out[i].name + "x" + out[j].name, "product");
          grew = grew || out.size() > had;
        }
    }
  }
  if (spec.topologies)
    for (int p = 1; p <= spec.max_topology_points; ++p) {
      int k = 0;
      for (const FinitePoset& opens : topology_frames(p)) add(opens, "T" + std::to_string(p) + "_" + std::to_string(++k), "topology");
    }
  if (spec.all_distributive) {
    std::map<int, int> per_size;
    auto small_enough = [&](const FinitePoset& P) { return count_downsets(P) <= spec.max_frame_size; };
    // k = 0 would give the one-element frame, which is left out.
    for (int k = 1; k < spec.max_frame_size; ++k)
      for (const FinitePoset& P : enumerate_posets(k, small_enough)) {
        const FinitePoset D = downset_lattice(P);
        add(D, "D" + std::to_string(D.size()) + "_" + std::to_string(++per_size[D.size()]), "distributive");
      }
  }
  return out;
}

std::vector<CorpusSemilattice> gen_semilattices(const CorpusSpec& spec) {
  if (spec.max_semilattice_size > kMaxSemilatticeSize)
    throw SpecTooLarge("max semilattice size is " + std::to_string(kMaxSemilatticeSize));
  std::vector<CorpusSemilattice> out;
  for (int n = 1; n <= spec.max_semilattice_size; ++n) {
    int k = 0;
    for (const FinitePoset& P : enumerate_posets(n)) {
      try {
        const std::string name = "J" + std::to_string(n) + "_" + std::to_string(++k);
        out.push_back({name, std::make_shared<const JoinSemilattice>(JoinSemilattice::from_poset(P, name))});
      } catch (const NotALattice&) {
        --k;
      }
    }
  }
  return out;
}

std::vector<FrameMorphism> gen_morphisms(const std::shared_ptr<const FiniteFrame>& L,
                                         const std::shared_ptr<const FiniteFrame>& M, const CorpusSpec& spec) {
  std::vector<std::vector<Element>> maps;
  HomSearch search;
  const bool exhaustive = L->size() * M->size() <= spec.exhaustive_morphism_product;
  if (!exhaustive) search.limit = 4096;
  enumerate_homomorphisms(L->tables(), M->tables(), search, [&](const std::vector<Element>& m) { maps.push_back(m); });
  if (!exhaustive && static_cast<int>(maps.size()) > spec.morphism_samples) {
    std::mt19937_64 rng(spec.seed ^ (static_cast<std::uint64_t>(L->size()) << 32) ^ static_cast<std::uint64_t>(M->size()));
    std::shuffle(maps.begin(), maps.end(), rng);
    maps.resize(spec.morphism_samples);
    std::sort(maps.begin(), maps.end());
  }
  std::vector<FrameMorphism> out;
  int k = 0;
  for (auto& m : maps)
    out.emplace_back(L, M, std::move(m), "f" + std::to_string(++k) + ":" + L->name() + "->" + M->name());
  return out;
}

std::vector<JoinHom> gen_join_homs(const std::shared_ptr<const JoinSemilattice>& S,
                                   const std::shared_ptr<const JoinSemilattice>& T) {
  HomSearch search;
  search.preserve_meets = false;
  search.preserve_bottom = false;
  std::vector<JoinHom> out;
  int k = 0;
  enumerate_homomorphisms(S->join_tables(), T->join_tables(), search, [&](const std::vector<Element>& m) {
    out.emplace_back(S, T, m, "h" + std::to_string(++k) + ":" + S->name() + "->" + T->name());
  });
  return out;
}

std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string corpus_manifest(const std::vector<CorpusFrame>& frames, const std::vector<CorpusSemilattice>& semilattices) {
  std::ostringstream out;
  out << "# smoothloc corpus manifest\n";
  for (const CorpusFrame& f : frames)
    out << "frame " << f.name << ' ' << f.frame->size() << ' ' << f.source << ' '
        << content_hash(emit_lattice(f.name, f.frame->poset())) << '\n';
  for (const CorpusSemilattice& s : semilattices)
    out << "semilattice " << s.name << ' ' << s.semilattice->size() << ' '
        << content_hash(emit_lattice(s.name, s.semilattice->poset())) << '\n';
  return out.str();
}

}  // namespace smoothloc
