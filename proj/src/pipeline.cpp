#include "rank3/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <thread>

#include "rank3/canonical.hpp"
#include "rank3/errors.hpp"
#include "rank3/genconn.hpp"
#include "rank3/polya.hpp"

namespace rank3 {

CountTable::CountTable(int coatoms, std::vector<mpz_class> values)
    : coatoms_(coatoms), values_(std::move(values)) {}

void CountTable::write_csv(std::ostream& out) const {
  out << "a,R\n";
  for (std::size_t a = 0; a < values_.size(); ++a) out << a << ',' << values_[a].get_str() << '\n';
}

void CountTable::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_csv(out);
  if (!out) throw InputError("error writing " + path.string());
}

CountTable CountTable::read_csv(std::istream& in, int coatoms) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "a,R") throw InputError("csv: expected header 'a,R', got '" + line + "'");

  std::vector<mpz_class> values;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError("csv: missing comma in '" + line + "'");
    const std::string a_text = line.substr(0, comma);
    const std::string r_text = line.substr(comma + 1);
    if (a_text != std::to_string(values.size())) {
      throw InputError("csv: expected row a = " + std::to_string(values.size()) + ", got '" +
                       a_text + "'");
    }
    mpz_class value;
    if (r_text.empty() || value.set_str(r_text, 10) != 0 || value < 0) {
      throw InputError("csv: bad value '" + r_text + "' at a = " + a_text);
    }
    values.push_back(std::move(value));
  }
  if (values.empty()) throw InputError("csv: no rows");
  return CountTable(coatoms, std::move(values));
}

CountTable CountTable::read_csv(const std::filesystem::path& path, int coatoms) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return read_csv(in, coatoms);
}

LatticeCounter::LatticeCounter(int coatoms, int a_max, bool memoize)
    : coatoms_(coatoms), a_max_(a_max), memoize_(memoize) {
  if (coatoms < 1 || coatoms > kMaxCoatoms) throw InputError("coatom count out of range");
  if (a_max < 0) throw InputError("a_max must be nonnegative");
  if (!memoize_) direct_.assign(static_cast<std::size_t>(a_max) + 1, 0);
}

void LatticeCounter::check(const BicoloredGraph& g) const {
  if (g.coatom_count() != coatoms_) {
    throw InputError("graph has " + std::to_string(g.coatom_count()) + " coatoms, expected " +
                     std::to_string(coatoms_));
  }
  if (!validate_connection_graph(g)) throw InputError("not a valid connection graph");
}

void LatticeCounter::add(const BicoloredGraph& g) {
  check(g);
  add(g, automorphism_group_on_coatoms(g));
}

void LatticeCounter::add(const BicoloredGraph& g, const PermGroup& automorphisms) {
  check(g);
  ++graphs_;
  if (automorphisms.is_trivial()) ++trivial_;
  const int shift = g.connector_count() + g.isolated_coatom_count();
  CycleIndex z = cycle_index(automorphisms);

  if (!memoize_) {
    if (shift > a_max_) return;
    const Series b = function_counting_series(z, a_max_ - shift);
    for (int k = 0; k <= b.max_degree(); ++k) direct_[shift + k] += b[k];
    return;
  }
  std::string key = z.to_string();
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(std::move(key), Entry{std::move(z), {}, {}}).first;
  ++it->second.shifts[shift];
}

void LatticeCounter::merge(LatticeCounter&& other) {
  if (other.coatoms_ != coatoms_ || other.a_max_ != a_max_ || other.memoize_ != memoize_) {
    throw std::invalid_argument("merge: counters are not compatible");
  }
  graphs_ += other.graphs_;
  trivial_ += other.trivial_;
  for (std::size_t a = 0; a < direct_.size(); ++a) direct_[a] += other.direct_[a];
  for (auto& [key, entry] : other.memo_) {
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      memo_.emplace(key, std::move(entry));
      continue;
    }
    for (const auto& [shift, n] : entry.shifts) it->second.shifts[shift] += n;
  }
  other.memo_.clear();
}

CountTable LatticeCounter::table() const {
  if (!memoize_) return CountTable(coatoms_, direct_);
  std::vector<mpz_class> values(static_cast<std::size_t>(a_max_) + 1, 0);
  for (const auto& [key, entry] : memo_) {
    const int lowest = entry.shifts.begin()->first;
    if (lowest > a_max_) continue;
    if (!entry.series) entry.series = function_counting_series(entry.index, a_max_);
    const Series& b = *entry.series;
    for (const auto& [shift, n] : entry.shifts) {
      const mpz_class weight(static_cast<unsigned long>(n));
      for (int a = shift; a <= a_max_; ++a) {
        mpz_addmul(values[a].get_mpz_t(), b[a - shift].get_mpz_t(), weight.get_mpz_t());
      }
    }
  }
  return CountTable(coatoms_, std::move(values));
}

MemoStats LatticeCounter::stats() const {
  return MemoStats{graphs_, memoize_ ? memo_.size() : 0, trivial_};
}

namespace {

CountTable finish(std::vector<LatticeCounter>& counters, MemoStats* stats) {
  for (std::size_t w = 1; w < counters.size(); ++w) counters[0].merge(std::move(counters[w]));
  if (stats != nullptr) *stats = counters[0].stats();
  return counters[0].table();
}

}  // namespace

CountTable count_lattices(int coatoms, int a_max, std::span<const BicoloredGraph> graphs, int jobs,
                          MemoStats* stats) {
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), 1,
                              std::max<std::size_t>(1, graphs.size()));
  std::vector<LatticeCounter> counters(workers, LatticeCounter(coatoms, a_max));
  if (workers == 1) {
    for (const auto& g : graphs) counters[0].add(g);
    return finish(counters, stats);
  }

  // Contiguous chunks, so each worker's share is fixed by the input order.
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::size_t begin = graphs.size() * w / workers;
      const std::size_t end = graphs.size() * (w + 1) / workers;
      try {
        for (std::size_t i = begin; i < end; ++i) counters[w].add(graphs[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return finish(counters, stats);
}

CountTable count_lattices(int coatoms, int a_max, int jobs, MemoStats* stats) {
  const int workers = std::max(1, jobs);
  std::vector<LatticeCounter> counters(workers, LatticeCounter(coatoms, a_max));
  for_each_connection_graph(coatoms, {a_max, workers}, [&](int worker, const GeneratedGraph& g) {
    counters[worker].add(g.graph, g.automorphisms);
  });
  return finish(counters, stats);
}

}  // namespace rank3
