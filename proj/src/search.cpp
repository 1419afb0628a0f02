#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>

#include "curvesys/error.hpp"
#include "curvesys/intersection.hpp"
#include "curvesys/parallel.hpp"
#include "curvesys/system.hpp"

namespace curvesys {

namespace {

// Cyclic words that equal their own canonical form. A canonical word starts with its least
// letter under letter_key, counting inverses, which prunes most branches early.
void canonical_loops(int rank, int max_len, std::vector<Word>& out) {
  Word w;
  std::function<void()> grow = [&] {
    if (!w.empty() && is_cyclically_reduced(w) && canonical_cyclic(w) == w) out.push_back(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (int g = 0; g < rank; ++g)
      for (bool inv : {false, true}) {
        const Letter l = letter_of(g, inv);
        if (!w.empty() && l == -w.back()) continue;
        if (!w.empty() && (letter_key(l) < letter_key(w[0]) || letter_key(-l) < letter_key(w[0]))) continue;
        w.push_back(l);
        grow();
        w.pop_back();
      }
  };
  grow();
}

void reduced_words(int rank, int max_len, std::vector<Word>& out) {
  Word w;
  std::function<void()> grow = [&] {
    out.push_back(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (int g = 0; g < rank; ++g)
      for (bool inv : {false, true}) {
        const Letter l = letter_of(g, inv);
        if (!w.empty() && l == -w.back()) continue;
        w.push_back(l);
        grow();
        w.pop_back();
      }
  };
  grow();
}

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

// Tomita-style branch and bound with greedy colouring. Vertex order is fixed by the caller.
class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Bits>& adj, long long node_budget, double time_budget_s)
      : adj_(adj), node_budget_(node_budget), time_budget_s_(time_budget_s),
        start_(std::chrono::steady_clock::now()) {}

  std::vector<int> run(bool* exhaustive, long long* nodes) {
    std::vector<int> all(adj_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> order, colour;
    colour_sort(all, order, colour);
    expand(order, colour);
    *exhaustive = !stopped_;
    *nodes = nodes_;
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  const std::vector<Bits>& adj_;
  long long node_budget_;
  double time_budget_s_;
  std::chrono::steady_clock::time_point start_;
  std::vector<int> current_, best_;
  long long nodes_ = 0;
  bool stopped_ = false;

  void colour_sort(const std::vector<int>& cand, std::vector<int>& order, std::vector<int>& colour) const {
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        bool clash = false;
        for (int u : classes[k])
          if (test(adj_[static_cast<size_t>(v)], static_cast<size_t>(u))) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    order.clear();
    colour.clear();
    for (std::size_t k = 0; k < classes.size(); ++k)
      for (int v : classes[k]) {
        order.push_back(v);
        colour.push_back(static_cast<int>(k) + 1);
      }
  }

  bool out_of_budget() {
    if (node_budget_ > 0 && nodes_ >= node_budget_) return true;
    if (time_budget_s_ > 0 && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > time_budget_s_) return true;
    }
    return false;
  }

  void expand(std::vector<int> order, std::vector<int> colour) {
    while (!order.empty()) {
      if (stopped_) return;
      if (current_.size() + static_cast<size_t>(colour.back()) <= best_.size()) return;
      ++nodes_;
      if (out_of_budget()) {
        stopped_ = true;
        return;
      }
      const int v = order.back();
      current_.push_back(v);
      std::vector<int> next;
      for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (test(adj_[static_cast<size_t>(v)], static_cast<size_t>(order[i]))) next.push_back(order[i]);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        // keep the caller's vertex order inside the subproblem
        std::sort(next.begin(), next.end());
        std::vector<int> o, c;
        colour_sort(next, o, c);
        expand(std::move(o), std::move(c));
      }
      current_.pop_back();
      order.pop_back();
      colour.pop_back();
    }
  }
};

}  // namespace

std::vector<CurveClass> curve_pool(const HolonomyRep& rep, SystemKind kind, int max_len, std::size_t* enumerated,
                                   int workers) {
  if (max_len < 0) throw Error(ErrorKind::precondition, "max_word_len must be non-negative");
  std::vector<CurveClass> cand;
  if (kind == SystemKind::loops) {
    std::vector<Word> words;
    canonical_loops(rep.rank(), max_len, words);
    for (Word& w : words) cand.push_back(CurveClass::loop(std::move(w)));
  } else {
    std::vector<Word> words;
    reduced_words(rep.rank(), max_len, words);
    const int m = rep.side_count();
    std::vector<std::vector<CurveClass>> found(words.size());
    parallel_for(
        words.size(),
        [&](std::size_t i) {
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
              try {
                CurveClass c = canonicalize(rep, CurveClass::arc(a, words[i], b));
                if (static_cast<int>(c.word.size()) <= max_len) found[i].push_back(std::move(c));
              } catch (const Error& e) {
                if (e.kind() != ErrorKind::trivial_word) throw;
              }
            }
        },
        workers);
    auto less = [](const CurveClass& x, const CurveClass& y) { return curve_less(x, y); };
    std::set<CurveClass, decltype(less)> uniq(less);
    for (auto& f : found) uniq.insert(f.begin(), f.end());
    cand.assign(uniq.begin(), uniq.end());
  }
  if (enumerated) *enumerated = cand.size();

  std::vector<char> keep(cand.size(), 0);
  parallel_for(
      cand.size(),
      [&](std::size_t i) {
        if (!is_essential(rep, cand[i])) return;
        const IntersectionResult r = self_intersection(rep, cand[i]);
        if (!r.certified) throw Error(ErrorKind::uncertified, "self-intersection of " + format_curve(rep, cand[i]));
        keep[i] = r.count == 0;
      },
      workers);
  std::vector<CurveClass> pool;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (keep[i]) pool.push_back(std::move(cand[i]));
  std::stable_sort(pool.begin(), pool.end(), [](const CurveClass& x, const CurveClass& y) {
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    return curve_less(x, y);
  });
  return pool;
}

SearchCertificate search_max(const HolonomyRep& rep, const SearchOptions& opts) {
  if (euler_char(rep.surface) >= 0 || rep.surface.boundaries < 1)
    throw Error(ErrorKind::precondition, "search needs chi < 0 and a cusp");
  if (opts.k < 1) throw Error(ErrorKind::precondition, "k must be positive");
  SearchCertificate cert;
  cert.max_word_len = opts.max_word_len;
  const std::vector<CurveClass> pool = curve_pool(rep, opts.kind, opts.max_word_len, &cert.enumerated, opts.workers);
  cert.pool_size = pool.size();

  const std::size_t n = pool.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<char>> row(n);
  parallel_for(
      n,
      [&](std::size_t i) {
        row[i].assign(n, 0);
        for (std::size_t j = i + 1; j < n; ++j) {
          // the mod-2 pairing fixes the parity of the count, so mismatched pairs are skipped
          if (opts.complete && opts.kind == SystemKind::loops &&
              parity_pairing(rep, pool[i].word, pool[j].word) != opts.k % 2)
            continue;
          const IntersectionResult r = intersection_number(rep, pool[i], pool[j]);
          if (!r.certified)
            throw Error(ErrorKind::uncertified, "pair " + format_curve(rep, pool[i]) + ", " + format_curve(rep, pool[j]));
          row[i][j] = opts.complete ? r.count == opts.k : r.count <= opts.k;
        }
      },
      opts.workers);
  std::vector<Bits> adj(n, Bits(words, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (row[i][j]) {
        set(adj[i], j);
        set(adj[j], i);
        ++cert.edges;
      }

  CliqueSearch cs(adj, opts.node_budget, opts.time_budget_s);
  const std::vector<int> best = cs.run(&cert.exhaustive, &cert.nodes);
  cert.best.surface = rep.surface;
  cert.best.kind = opts.kind;
  for (int v : best) cert.best.members.push_back(pool[static_cast<size_t>(v)]);
  cert.best = validate(rep, cert.best, opts.k, opts.complete, opts.workers);
  return cert;
}

nlohmann::json certificate_to_json(const SearchCertificate& cert) {
  nlohmann::json j;
  j["pool"] = {{"max_word_len", cert.max_word_len},
               {"enumerated", cert.enumerated},
               {"size", cert.pool_size},
               {"edges", cert.edges}};
  j["nodes"] = cert.nodes;
  j["exhaustive"] = cert.exhaustive;
  j["best_size"] = cert.best.members.size();
  j["best"] = system_to_json(cert.best);
  return j;
}

}  // namespace curvesys
