#include "cubiq/chain_complex.hpp"

#include <algorithm>

namespace cubiq {

ChainComplex::ChainComplex(Field field, std::vector<std::vector<std::string>> basis,
                           std::vector<ExactMatrix> boundary, int valid_up_to)
    : field_(field), basis_(std::move(basis)), boundary_(std::move(boundary)),
      valid_up_to_(valid_up_to) {
  if (boundary_.size() != basis_.size()) throw Error("one boundary matrix per degree expected");
  for (std::size_t p = 0; p < basis_.size(); ++p) {
    const std::size_t below = p == 0 ? 0 : basis_[p - 1].size();
    const ExactMatrix& d = boundary_[p];
    if (d.rows() != below || d.cols() != basis_[p].size() || !(d.field() == field_))
      throw Error("boundary matrix in degree " + std::to_string(p) + " has the wrong shape");
    if (p >= 2 && !(boundary_[p - 1] * d).is_zero())
      throw Error("boundary squares to a nonzero map in degree " + std::to_string(p));
  }
  if (valid_up_to_ > top_degree()) valid_up_to_ = top_degree();
}

std::size_t ChainComplex::rank(int p) const {
  if (p < 0 || p > top_degree()) return 0;
  return basis_[static_cast<std::size_t>(p)].size();
}

const std::vector<std::string>& ChainComplex::basis(int p) const {
  return basis_.at(static_cast<std::size_t>(p));
}

const ExactMatrix& ChainComplex::boundary(int p) const {
  return boundary_.at(static_cast<std::size_t>(p));
}

HomologyReport ChainComplex::homology() const {
  HomologyReport r;
  r.field = field_;
  r.valid_up_to = valid_up_to_;
  for (const ExactMatrix& d : boundary_) r.boundary_ranks.push_back(cubiq::rank(d));
  for (int p = 0; p <= top_degree(); ++p) {
    const auto up = static_cast<std::size_t>(p);
    const std::size_t incoming = p < top_degree() ? r.boundary_ranks[up + 1] : 0;
    r.chain_ranks.push_back(rank(p));
    r.betti.push_back(rank(p) - r.boundary_ranks[up] - incoming);
  }
  return r;
}

bool is_chain_map(const ChainComplex& c, const ChainComplex& d, const ChainMap& f) {
  const int top = std::min({c.top_degree(), d.top_degree(), static_cast<int>(f.size()) - 1});
  for (int p = 0; p <= top; ++p) {
    const ExactMatrix& fp = f[static_cast<std::size_t>(p)];
    if (fp.rows() != d.rank(p) || fp.cols() != c.rank(p)) return false;
    if (p >= 1 && !(d.boundary(p) * fp == f[static_cast<std::size_t>(p - 1)] * c.boundary(p)))
      return false;
  }
  return true;
}

bool agree_on_homology(const ChainComplex& c, const ChainComplex& d, const ChainMap& f,
                       const ChainMap& g, int p) {
  if (p + 1 > d.top_degree()) throw Error("homology comparison needs the next boundary");
  const auto up = static_cast<std::size_t>(p);
  const ExactMatrix diff = f[up] - g[up];
  const RankKernel cycles = rank_kernel(c.boundary(p));
  for (const auto& z : cycles.kernel) {
    ExactMatrix col(z.size(), 1, z, c.field());
    const ExactMatrix image = diff * col;
    if (!in_column_span(d.boundary(p + 1), image.column(0))) return false;
  }
  return true;
}

}  // namespace cubiq
