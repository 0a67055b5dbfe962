#include "logcy/lattice.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "logcy/io.hpp"

namespace logcy::lattice {

CurveClass CurveClass::from(std::vector<long> coeffs) {
  IntVec v(static_cast<Eigen::Index>(coeffs.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = coeffs[static_cast<size_t>(i)];
  return CurveClass(std::move(v));
}

CurveClass SurfaceModel::boundary_total() const {
  IntVec total = IntVec::Zero(dim());
  for (const auto& [name, cls] : boundary) total += cls.coefficients;
  return CurveClass(total);
}

const CurveClass& SurfaceModel::boundary_component(const std::string& name) const {
  for (const auto& [n, cls] : boundary)
    if (n == name) return cls;
  throw ConfigError("no boundary component named '" + name + "'");
}

void SurfaceModel::validate() const {
  const Eigen::Index n = dim();
  if (intersection_matrix.rows() != n || intersection_matrix.cols() != n)
    throw DimensionError("intersection matrix does not match basis size");
  if (intersection_matrix != intersection_matrix.transpose().eval())
    throw ConfigError("intersection matrix is not symmetric");
  if (canonical_class.dim() != n)
    throw DimensionError("canonical class has wrong dimension");
  for (const auto& [name, cls] : boundary)
    if (cls.dim() != n)
      throw DimensionError("boundary component '" + name + "' has wrong dimension");
}

static void check_dims(const SurfaceModel& model, const CurveClass& c, const char* what) {
  if (c.dim() != model.dim())
    throw DimensionError(std::string(what) + ": class dimension " +
                         std::to_string(c.dim()) + " vs basis size " +
                         std::to_string(model.dim()));
}

Int intersect(const SurfaceModel& model, const CurveClass& a, const CurveClass& b) {
  check_dims(model, a, "intersect");
  check_dims(model, b, "intersect");
  return (a.coefficients.transpose() * model.intersection_matrix * b.coefficients)(0, 0);
}

Int tangency_weight(const SurfaceModel& model, const CurveClass& beta) {
  return intersect(model, beta, model.boundary_total());
}

Int arithmetic_genus(const SurfaceModel& model, const CurveClass& beta) {
  Int self = intersect(model, beta, beta);
  Int with_k = intersect(model, beta, model.canonical_class);
  Int twice = self + with_k;
  if (mpz_odd_p(twice.get_mpz_t()))
    throw InvalidClassError("beta.(beta+K) is odd; not an algebraic curve class here");
  return exact_div(twice, 2) + 1;
}

Int contact_point_count(const SurfaceModel& model, const Int& w) {
  if (w <= 0) throw DomainError("contact order must be positive");
  switch (model.boundary_kind) {
    case BoundaryKind::SmoothElliptic:
      return w * w;  // torsor under the w-torsion of Pic^0 of an elliptic curve
    case BoundaryKind::NodalCycle:
      return w;      // torsor under mu_w of the cycle's Pic^0 = C*
  }
  throw DomainError("unknown boundary kind");
}

std::pair<SurfaceModel, CurveClass> blowup_transform(
    const SurfaceModel& base, const CurveClass& beta,
    const std::vector<TangencyProfile>& profile) {
  base.validate();
  check_dims(base, beta, "blowup_transform");

  size_t extra = 0;
  for (size_t i = 0; i < profile.size(); ++i) {
    const auto& entry = profile[i];
    const CurveClass& comp = base.boundary_component(entry.component);
    Int pairing = intersect(base, beta, comp);
    Int sum = 0;
    for (const Int& p : entry.partition) {
      if (p < 1) throw ProfileError("partition entries must be >= 1");
      sum += p;
    }
    if (sum != pairing)
      throw ProfileError("partition on '" + entry.component + "' sums to " +
                         sum.get_str() + ", expected beta.D = " + pairing.get_str());
    for (size_t j = i + 1; j < profile.size(); ++j)
      if (profile[j].component == entry.component)
        throw ProfileError("component '" + entry.component + "' listed twice");
    extra += entry.partition.size();
  }

  const Eigen::Index n = base.dim();
  const Eigen::Index m = n + static_cast<Eigen::Index>(extra);

  SurfaceModel out;
  out.basis_labels = base.basis_labels;
  out.boundary_kind = base.boundary_kind;
  out.intersection_matrix = IntMat::Zero(m, m);
  out.intersection_matrix.topLeftCorner(n, n) = base.intersection_matrix;

  auto lift = [&](const IntVec& v) {
    IntVec w = IntVec::Zero(m);
    w.head(n) = v;
    return w;
  };

  IntVec canonical = lift(base.canonical_class.coefficients);
  IntVec beta_new = lift(beta.coefficients);
  std::vector<std::pair<std::string, IntVec>> boundary_new;
  for (const auto& [name, cls] : base.boundary)
    boundary_new.emplace_back(name, lift(cls.coefficients));

  Eigen::Index next = n;
  for (size_t i = 0; i < profile.size(); ++i) {
    const auto& entry = profile[i];
    for (size_t j = 0; j < entry.partition.size(); ++j) {
      out.basis_labels.push_back("E_" + std::to_string(i + 1) + std::to_string(j + 1));
      out.intersection_matrix(next, next) = -1;
      canonical(next) = 1;                       // K~ = pullback(K) + sum E
      beta_new(next) = -entry.partition[j];      // beta~ = pullback(beta) - sum p E
      for (auto& [name, cls] : boundary_new)
        if (name == entry.component) cls(next) = -1;  // strict transform
      ++next;
    }
  }

  out.canonical_class = CurveClass(canonical);
  for (auto& [name, cls] : boundary_new) out.boundary.emplace_back(name, CurveClass(cls));
  out.validate();
  return {out, CurveClass(beta_new)};
}

// ---------------------------------------------------------------------------
// Key-value text format

SurfaceModel parse_model(std::istream& in) {
  std::vector<std::string> basis;
  std::vector<std::pair<std::string, std::vector<Int>>> rows;
  std::vector<Int> canonical;
  std::vector<std::pair<std::string, std::vector<Int>>> boundary;
  std::string kind_text;

  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto read_ints = [&](std::vector<Int>& dst) {
      std::string tok;
      while (ls >> tok) dst.emplace_back(tok);
    };
    if (key == "basis") {
      std::string tok;
      while (ls >> tok) basis.push_back(tok);
    } else if (key == "matrix_row") {
      std::string label;
      if (!(ls >> label)) throw ConfigError("matrix_row without label (line " + std::to_string(lineno) + ")");
      rows.emplace_back(label, std::vector<Int>{});
      read_ints(rows.back().second);
    } else if (key == "canonical") {
      read_ints(canonical);
    } else if (key == "boundary") {
      std::string label;
      if (!(ls >> label)) throw ConfigError("boundary without label (line " + std::to_string(lineno) + ")");
      boundary.emplace_back(label, std::vector<Int>{});
      read_ints(boundary.back().second);
    } else if (key == "boundary_kind") {
      ls >> kind_text;
    } else {
      throw ConfigError("unknown key '" + key + "' in model config (line " + std::to_string(lineno) + ")");
    }
  }

  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  if (n == 0) throw ConfigError("model config has no basis");
  SurfaceModel model;
  model.basis_labels = basis;
  model.intersection_matrix = IntMat::Zero(n, n);
  if (rows.size() != basis.size()) throw ConfigError("expected one matrix_row per basis label");
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& [label, vals] = rows[static_cast<size_t>(i)];
    if (label != basis[static_cast<size_t>(i)])
      throw ConfigError("matrix_row order must follow the basis (got '" + label + "')");
    if (vals.size() != basis.size()) throw ConfigError("matrix_row '" + label + "' has wrong length");
    for (Eigen::Index j = 0; j < n; ++j) model.intersection_matrix(i, j) = vals[static_cast<size_t>(j)];
  }
  auto to_vec = [&](const std::vector<Int>& vals, const std::string& what) {
    if (vals.size() != basis.size()) throw ConfigError(what + " has wrong length");
    IntVec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = vals[static_cast<size_t>(i)];
    return v;
  };
  model.canonical_class = CurveClass(to_vec(canonical, "canonical"));
  for (const auto& [label, vals] : boundary)
    model.boundary.emplace_back(label, CurveClass(to_vec(vals, "boundary " + label)));
  if (kind_text == "smooth-elliptic")
    model.boundary_kind = BoundaryKind::SmoothElliptic;
  else if (kind_text == "nodal-cycle")
    model.boundary_kind = BoundaryKind::NodalCycle;
  else
    throw ConfigError("boundary_kind must be smooth-elliptic or nodal-cycle");
  model.validate();
  return model;
}

void write_model(std::ostream& out, const SurfaceModel& model) {
  out << "basis";
  for (const auto& l : model.basis_labels) out << ' ' << l;
  out << '\n';
  for (Eigen::Index i = 0; i < model.dim(); ++i) {
    out << "matrix_row " << model.basis_labels[static_cast<size_t>(i)];
    for (Eigen::Index j = 0; j < model.dim(); ++j)
      out << ' ' << model.intersection_matrix(i, j).get_str();
    out << '\n';
  }
  out << "canonical";
  for (Eigen::Index i = 0; i < model.dim(); ++i)
    out << ' ' << model.canonical_class.coefficients(i).get_str();
  out << '\n';
  for (const auto& [name, cls] : model.boundary) {
    out << "boundary " << name;
    for (Eigen::Index i = 0; i < model.dim(); ++i) out << ' ' << cls.coefficients(i).get_str();
    out << '\n';
  }
  out << "boundary_kind "
      << (model.boundary_kind == BoundaryKind::SmoothElliptic ? "smooth-elliptic" : "nodal-cycle")
      << '\n';
}

SurfaceModel preset(const std::string& name) {
  return io::load_model_file(io::data_dir() + "/models/" + name + ".model");
}

}  // namespace logcy::lattice
