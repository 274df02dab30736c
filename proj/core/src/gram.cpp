#include "bschur/gram.hpp"

#include <algorithm>
#include <map>

namespace bschur {

std::string Alphabet::to_string() const {
  switch (kind) {
    case standard: return "standard";
    case b_odd: return "B-odd(r=" + std::to_string(r) + ")";
    case b_even: return "B-even(r=" + std::to_string(r) + ")";
  }
  return "?";
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::NONZERO_FORM: return "NONZERO_FORM";
    case CellStatus::ZERO_FORM: return "ZERO_FORM";
    case CellStatus::EMPTY_CELL: return "EMPTY_CELL";
  }
  return "?";
}

bool GramMatrix::all_zero() const {
  for (const auto& row : entries)
    for (const Scalar& v : row)
      if (!v.is_zero()) return false;
  return true;
}

CellStatus GramMatrix::status() const {
  if (empty()) return CellStatus::EMPTY_CELL;
  return all_zero() ? CellStatus::ZERO_FORM : CellStatus::NONZERO_FORM;
}

long GramMatrix::exact_rank() const {
  std::vector<std::vector<Scalar>> m = entries;
  size_t nrows = m.size();
  if (nrows == 0) return 0;
  size_t ncols = m[0].size();
  long rank = 0;
  size_t prow = 0;
  for (size_t col = 0; col < ncols && prow < nrows; ++col) {
    size_t piv = nrows;
    for (size_t r = prow; r < nrows; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == nrows) continue;
    std::swap(m[prow], m[piv]);
    Scalar inv = m[prow][col].inv();
    for (size_t r = prow + 1; r < nrows; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar f = m[r][col] * inv;
      for (size_t c = col; c < ncols; ++c) m[r][c] -= f * m[prow][c];
    }
    ++rank;
    ++prow;
  }
  return rank;
}

std::vector<Bitableau> alphabet_tableaux(const Bipartition& lambda, long n,
                                         const Alphabet& alphabet) {
  switch (alphabet.kind) {
    case Alphabet::standard:
      return standard_tableaux(lambda);
    case Alphabet::b_odd:
      return semistandard_tableaux(lambda, alphabet.r, /*allow_zero=*/true);
    case Alphabet::b_even:
      return semistandard_tableaux(lambda, alphabet.r, /*allow_zero=*/false);
  }
  throw InternalError("alphabet_tableaux: bad kind");
}

namespace {

Bicomposition content_of(const Bitableau& t, long n, const Alphabet& alphabet) {
  if (alphabet.kind == Alphabet::standard) {
    // type (empty, (1^n)); encode as ((0), (1,..,1)) for uniform handling
    Bicomposition type;
    type.c1 = {0};
    type.c2.assign(static_cast<size_t>(n), 1);
    return type;
  }
  return letter_content(t, alphabet.r);
}

// Standard tableaux lifting a letter tableau; for the standard alphabet the
// tableau is its own unique lift.
std::vector<Bitableau> lifts_of(const Bitableau& t, const Bicomposition& type,
                                const Alphabet& alphabet) {
  if (alphabet.kind == Alphabet::standard) return {t};
  return standard_lifts(t, type);
}

}  // namespace

GramMatrix gram_matrix(const MurphyBasis& basis, const Bipartition& lambda,
                       const Alphabet& alphabet, CompositeOrder order) {
  const HeckeAlgebra& H = basis.algebra();
  const WeylGroupB& W = H.group();
  long n = H.rank();
  if (lambda.size() != n) throw DomainError("gram_matrix: shape size mismatch");

  GramMatrix out;
  out.shape = lambda;
  out.alphabet = alphabet;
  out.index = alphabet_tableaux(lambda, n, alphabet);
  size_t N = out.index.size();
  out.entries.assign(N, std::vector<Scalar>(N, H.field().zero()));
  if (N == 0) return out;

  int shape_idx = basis.shape_index(lambda);
  const HeckeElt& m_lambda = basis.m_lambda(shape_idx);

  // group indices by content; the form is block-diagonal across contents
  std::map<Parts, std::vector<size_t>> groups;
  for (size_t i = 0; i < N; ++i) {
    Bicomposition type = content_of(out.index[i], n, alphabet);
    Parts key = type.c1;
    key.insert(key.end(), type.c2.begin(), type.c2.end());
    groups[key].push_back(i);
  }

  for (const auto& [key, members] : groups) {
    Bicomposition type = content_of(out.index[members[0]], n, alphabet);
    HeckeElt m_nu = H.m_element(type);
    std::vector<int> gens = H.type_parabolic_gens(type);
    std::vector<bool> distinguished(static_cast<size_t>(W.size()), false);
    for (long d : H.distinguished_reps(gens)) distinguished[static_cast<size_t>(d)] = true;
    auto ce_it = m_nu.find(W.identity());
    if (ce_it == m_nu.end() || ce_it->second.is_zero())
      throw InternalError("gram: identity coefficient of m_nu vanishes");
    Scalar ce_inv = ce_it->second.inv();

    // prefetch lifts and the m_lambda * G_S products per member
    std::vector<std::vector<long>> lift_dperm(members.size());
    std::vector<HeckeElt> row_products(members.size());
    for (size_t a = 0; a < members.size(); ++a) {
      std::vector<Bitableau> lifts = lifts_of(out.index[members[a]], type, alphabet);
      if (lifts.empty()) throw InternalError("gram: semistandard tableau has no lifts");
      HeckeElt prod;
      for (const Bitableau& s : lifts) {
        long d = W.index_of(H.d_of(s));
        lift_dperm[a].push_back(d);
        prod = H.add(prod, H.mul_basis_right(m_lambda, d));
      }
      row_products[a] = std::move(prod);
    }

    for (size_t b = 0; b < members.size(); ++b) {
      // K = sum_s T*_{d(s)} m_lambda over lifts of the column tableau
      HeckeElt K;
      for (long d : lift_dperm[b])
        K = H.add(K, H.mul_basis_left(W.inverse(d), m_lambda));
      // divide K by m_nu on the left via the distinguished-coset slices
      HeckeElt Z;
      for (const auto& [w, c] : K)
        if (distinguished[static_cast<size_t>(w)]) Z.emplace(w, c * ce_inv);
      if (!(H.mul(m_nu, Z) == K))
        throw InternalError("gram: coset division failed (element outside m_nu H)");
      for (size_t a = 0; a < members.size(); ++a) {
        HeckeElt Y = H.mul(row_products[a], Z);
        Scalar val = basis.leading_coefficient(Y, shape_idx);
        size_t i = members[a], j = members[b];
        if (order == CompositeOrder::first_index_target)
          out.entries[i][j] = val;
        else
          out.entries[j][i] = val;
      }
    }
  }
  return out;
}

CellStatus cell_status(const MurphyBasis& basis, const Bipartition& lambda,
                       const Alphabet& alphabet) {
  return gram_matrix(basis, lambda, alphabet).status();
}

}  // namespace bschur
