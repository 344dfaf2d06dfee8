#include "linefree/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "linefree/construction.hpp"

namespace linefree {
namespace {

enum class Cell : std::uint8_t { Undecided, In, Out };

class Search {
 public:
  Search(const Space& space, const SearchOptions& opts)
      : space_(space), n_points_(space.size()), budget_(opts.node_budget),
        best_(hypercube(space.mod(), space.dim())) {
    std::uint32_t class_id = 0;
    for (const Direction& d : canonical_directions(space)) {
      for (std::uint64_t k = 0; k < space.lines_per_direction(); ++k) {
        std::vector<std::uint32_t> pts;
        for (const Point& pt : line_points(space, line_in_direction(space, d, k)))
          pts.push_back(static_cast<std::uint32_t>(space.index(pt)));
        line_class_.push_back(class_id);
        lines_.push_back(std::move(pts));
      }
      ++class_id;
    }
    lines_of_.resize(n_points_);
    for (std::uint32_t l = 0; l < lines_.size(); ++l)
      for (auto pt : lines_[l]) lines_of_[pt].push_back(l);

    in_count_.assign(lines_.size(), 0);
    out_count_.assign(lines_.size(), 0);
    open_in_class_.assign(class_id, static_cast<std::uint32_t>(space.lines_per_direction()));
    cells_.assign(n_points_, Cell::Undecided);
    best_size_ = best_.cardinality();

    // Translations preserve line-freeness and every line-free set misses a
    // point, so the origin may be assumed excluded.
    order_.resize(n_points_ - 1);
    std::iota(order_.begin(), order_.end(), 1u);
    if (opts.seed != 0) std::shuffle(order_.begin(), order_.end(), std::mt19937_64(opts.seed));
    exclude(0);
  }

  SearchResult run() {
    exact_ = true;
    descend(0);
    SearchResult res{best_size_, best_, nodes_, exact_};
    return res;
  }

 private:
  std::uint64_t upper_bound() const {
    const auto worst = *std::max_element(open_in_class_.begin(), open_in_class_.end());
    return n_points_ - excluded_ - worst;
  }

  bool completes_line(std::uint32_t pt) const {
    for (auto l : lines_of_[pt])
      if (in_count_[l] + 1 == space_.p()) return true;
    return false;
  }

  void include(std::uint32_t pt) {
    cells_[pt] = Cell::In;
    ++included_;
    for (auto l : lines_of_[pt]) ++in_count_[l];
  }
  void uninclude(std::uint32_t pt) {
    cells_[pt] = Cell::Undecided;
    --included_;
    for (auto l : lines_of_[pt]) --in_count_[l];
  }
  void exclude(std::uint32_t pt) {
    cells_[pt] = Cell::Out;
    ++excluded_;
    for (auto l : lines_of_[pt])
      if (out_count_[l]++ == 0) --open_in_class_[line_class_[l]];
  }
  void unexclude(std::uint32_t pt) {
    cells_[pt] = Cell::Undecided;
    --excluded_;
    for (auto l : lines_of_[pt])
      if (--out_count_[l] == 0) ++open_in_class_[line_class_[l]];
  }

  void descend(std::size_t depth) {
    if (!exact_) return;
    if (budget_ != 0 && nodes_ >= budget_) {
      exact_ = false;
      return;
    }
    ++nodes_;
    if (upper_bound() <= best_size_) return;
    if (depth == order_.size()) {
      // includes never complete a line, so the leaf set is line-free
      best_size_ = included_;
      best_ = PointSet(space_);
      for (std::uint32_t i = 0; i < n_points_; ++i)
        if (cells_[i] == Cell::In) best_.insert_index(i);
      return;
    }
    const std::uint32_t pt = order_[depth];
    if (!completes_line(pt)) {
      include(pt);
      descend(depth + 1);
      uninclude(pt);
    }
    exclude(pt);
    descend(depth + 1);
    unexclude(pt);
  }

  Space space_;
  std::uint64_t n_points_;
  std::uint64_t budget_;
  std::vector<std::vector<std::uint32_t>> lines_;
  std::vector<std::uint32_t> line_class_;
  std::vector<std::vector<std::uint32_t>> lines_of_;
  std::vector<std::uint32_t> in_count_, out_count_, open_in_class_;
  std::vector<Cell> cells_;
  std::vector<std::uint32_t> order_;
  std::uint64_t included_ = 0, excluded_ = 0, nodes_ = 0;
  PointSet best_;
  std::uint64_t best_size_ = 0;
  bool exact_ = true;
};

}  // namespace

SearchResult max_line_free(const PrimeModulus& mod, unsigned dim, const SearchOptions& opts) {
  const Space space(mod, dim);
  SearchOptions o = opts;
  if (o.node_budget == 0) o.node_budget = mod.p() == 3 ? 10'000'000 : 100'000'000;
  return Search(space, o).run();
}

}  // namespace linefree
