#include "langlands/dl_gl2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "langlands/errors.hpp"

namespace langlands {

Gl2ClassData Gl2ClassData::build(std::shared_ptr<const FieldTower> tower) {
  if (tower->ell() != 2) throw std::invalid_argument("Gl2ClassData: tower must have ell == 2");
  const std::int64_t q = tower->q();

  Gl2ClassData data;
  data.tower_ = tower;
  data.group_order_ = (q * q - 1) * (q * q - q);

  auto label = [](const char* kind, std::int64_t x, std::int64_t y) {
    std::ostringstream os;
    os << kind << '(' << x;
    if (y >= 0) os << ',' << y;
    os << ')';
    return os.str();
  };

  // central z and z*unipotent, z in f_q^*
  for (std::int64_t x = 0; x < q - 1; ++x) {
    data.classes_.push_back({Gl2Class::Kind::kCentral, 1, x, -1, label("z", x, -1)});
    data.classes_.push_back({Gl2Class::Kind::kCentralUnipotent, q * q - 1, x, -1, label("zu", x, -1)});
  }
  // split diag(x, y), x != y, unordered
  for (std::int64_t x = 0; x < q - 1; ++x)
    for (std::int64_t y = x + 1; y < q - 1; ++y)
      data.classes_.push_back({Gl2Class::Kind::kSplit, q * q + q, x, y, label("split", x, y)});
  // elliptic w in f_{q^2}^* \ f_q^*, up to w <-> w^q
  std::vector<bool> seen(tower->unit_order(), false);
  for (std::int64_t w = 0; w < tower->unit_order(); ++w) {
    if (seen[w] || w % (q + 1) == 0) continue;  // w in f_q^* iff (q+1) | dlog
    const std::int64_t conj = (w * q) % tower->unit_order();
    seen[w] = seen[conj] = true;
    data.classes_.push_back({Gl2Class::Kind::kElliptic, q * q - q, w, -1, label("ell", w, -1)});
  }

  // class equation
  std::int64_t total = 0;
  for (const auto& c : data.classes_) total += c.size;
  if (total != data.group_order_ || static_cast<std::int64_t>(data.classes_.size()) != q * q - 1)
    throw std::logic_error("Gl2ClassData: class equation failed");
  return data;
}

CuspidalCharRow cuspidal_character(const Gl2ClassData& data, std::int64_t chi_exponent) {
  const auto& tower = *data.tower();
  const std::int64_t n = tower.unit_order();  // q^2 - 1
  const std::int64_t q = data.q();
  chi_exponent = ((chi_exponent % n) + n) % n;
  if ((chi_exponent * q) % n == chi_exponent)
    throw NotRegular("cuspidal_character: chi_o is Frobenius-fixed");

  // chi_o(gen^d) = zeta_n^(chi_exponent * d); base-field values go through
  // the subfield inclusion dlog -> dlog * (q + 1)
  auto chi = [&](std::int64_t dlog) { return RootOfUnity(chi_exponent * dlog, n); };
  const std::int64_t base_step = n / (q - 1);  // q + 1

  CuspidalCharRow row;
  row.chi_exponent = chi_exponent;
  row.dim = q - 1;
  row.values.reserve(data.classes().size());
  for (const auto& c : data.classes()) {
    RootSum v;
    switch (c.kind) {
      case Gl2Class::Kind::kCentral:
        v = RootSum(chi(c.x * base_step)).scaled(q - 1);
        break;
      case Gl2Class::Kind::kCentralUnipotent:
        v = RootSum(chi(c.x * base_step)).scaled(-1);
        break;
      case Gl2Class::Kind::kSplit:
        break;  // cuspidal rows vanish on split regular classes
      case Gl2Class::Kind::kElliptic:
        v.add(chi(c.x), -1);
        v.add(chi(c.x * q), -1);
        break;
    }
    row.values.push_back(std::move(v));
  }
  return row;
}

std::int64_t row_inner_product(const Gl2ClassData& data, const CuspidalCharRow& a,
                               const CuspidalCharRow& b) {
  RootSum total;
  for (std::size_t i = 0; i < data.classes().size(); ++i)
    total += (a.values[i] * b.values[i].conj()).scaled(data.classes()[i].size);
  const auto v = total.as_integer();
  if (!v || *v % data.group_order() != 0)
    throw CrossCheckFailure("row_inner_product: sum is not an integer multiple of |GL(2,q)|");
  return *v / data.group_order();
}

bool verify_cuspidal(const Gl2ClassData& data, const CuspidalCharRow& row) {
  // identity value = dim
  for (std::size_t i = 0; i < data.classes().size(); ++i) {
    const auto& c = data.classes()[i];
    if (c.kind == Gl2Class::Kind::kCentral && c.x == 0)
      if (!row.values[i].equals_integer(row.dim)) return false;
  }
  try {
    if (row_inner_product(data, row, row) != 1) return false;
  } catch (const CrossCheckFailure&) {
    return false;  // a corrupted row need not even have an integral norm
  }

  // cuspidality: for each central z the unipotent-group sum vanishes:
  // chi(z) + (q - 1) chi(z u) = 0
  for (std::int64_t x = 0; x < data.q() - 1; ++x) {
    RootSum sum;
    for (std::size_t i = 0; i < data.classes().size(); ++i) {
      const auto& c = data.classes()[i];
      if (c.x != x) continue;
      if (c.kind == Gl2Class::Kind::kCentral) sum += row.values[i];
      if (c.kind == Gl2Class::Kind::kCentralUnipotent) sum += row.values[i].scaled(data.q() - 1);
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

CuspidalMetadata cuspidal_metadata(const FieldTower& tower, std::int64_t chi_exponent) {
  const std::int64_t n = tower.unit_order();
  chi_exponent = ((chi_exponent % n) + n) % n;
  CuspidalMetadata meta;
  std::int64_t e = chi_exponent;
  for (std::int64_t i = 0; i < tower.ell(); ++i) {
    meta.orbit_exponents.push_back(e);
    e = (e * tower.q()) % n;
  }
  std::sort(meta.orbit_exponents.begin(), meta.orbit_exponents.end());
  meta.dimension = 1;
  std::int64_t qi = 1;
  for (std::int64_t i = 1; i < tower.ell(); ++i) {
    qi *= tower.q();
    meta.dimension *= qi - 1;
  }
  return meta;
}

}  // namespace langlands
