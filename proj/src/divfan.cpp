#include "tfan/divfan.hpp"

#include "tfan/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tfan {

namespace {

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string member_loc(std::size_t i) { return "member " + std::to_string(i); }

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// c cap tau, as a coefficient.
Coefficient meet(const Coefficient& c, const Cone& tau) {
  if (c.is_empty()) return c;
  auto p = intersect(c.polyhedron(), Polyhedron::from_cone(tau));
  return p ? Coefficient(*p) : Coefficient::empty();
}

}  // namespace

DivisorialFan::DivisorialFan(std::size_t rank, std::vector<PDivisor> members)
    : rank_(rank), members_(std::move(members)) {
  points_ = {PointOnP1::zero(), PointOnP1::infinity()};
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].rank() != rank_) throw Error(member_loc(i) + " has the wrong rank");
    for (const auto& [y, c] : members_[i].support()) points_.push_back(y);
  }
  sort_unique(points_);
}

DivisorialFan DivisorialFan::closed_under_intersection() const {
  auto members = members_;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto d = intersect(members[i], members[j]);
      if (std::find(members.begin(), members.end(), d) == members.end()) members.push_back(d);
    }
  return DivisorialFan(rank_, std::move(members));
}

Slice make_slice(std::optional<PointOnP1> at, std::vector<Polyhedron> cells) {
  Slice s;
  s.at = std::move(at);
  sort_unique(cells);
  s.cells = std::move(cells);
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < s.cells.size() && maximal; ++j)
      if (j != i && is_face(s.cells[i], s.cells[j])) maximal = false;
    if (maximal) s.maximal.push_back(s.cells[i]);
    auto faces = s.cells[i].faces();
    s.closure.insert(s.closure.end(), faces.begin(), faces.end());
  }
  sort_unique(s.closure);
  return s;
}

std::vector<Slice> slices(const DivisorialFan& f) {
  std::vector<Slice> out;
  for (const auto& y : f.points()) {
    std::vector<Polyhedron> cells;
    for (const auto& d : f.members())
      if (auto c = d.at(y); !c.is_empty()) cells.push_back(c.polyhedron());
    out.push_back(make_slice(y, std::move(cells)));
  }
  std::vector<Polyhedron> tails;
  for (const auto& d : f.members()) tails.push_back(Polyhedron::from_cone(d.tail()));
  out.push_back(make_slice(std::nullopt, std::move(tails)));
  return out;
}

Report check_slice(const Slice& s, std::size_t rank) {
  Report r;
  const auto loc = s.location();
  if (s.cells.empty()) {
    r.add("slice", loc, "slice has no cells");
    return r;
  }
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
      const auto &p = s.cells[i], &q = s.cells[j];
      auto meet = intersect(p, q);
      if (meet && (!is_face(*meet, p) || !is_face(*meet, q)))
        r.add("slice", loc,
              "cells " + str(p) + " and " + str(q) + " meet in " + str(*meet) +
                  ", which is not a common face");
    }
  std::map<Polyhedron, int> facet_count;
  for (const auto& p : s.maximal) {
    if (p.dim() != rank) {
      r.add("slice", loc, "maximal cell " + str(p) + " is not full-dimensional");
      continue;
    }
    if (rank == 0) continue;
    for (const auto& f : p.faces_of_dim(rank - 1)) ++facet_count[f];
  }
  for (const auto& [facet, n] : facet_count)
    if (n != 2)
      r.add("slice", loc,
            "facet " + str(facet) + " lies in " + std::to_string(n) +
                " maximal cells instead of two");
  return r;
}

Report check_slice_rule(const DivisorialFan& f) {
  auto all = slices(f);
  auto reports = parallel_map<Report>(all.size(), [&](std::size_t i) {
    return check_slice(all[i], f.rank());
  });
  Report r;
  for (const auto& x : reports) r.merge(x);
  return r;
}

Report check_degree_rule(const DivisorialFan& f) {
  Report r;
  const auto& m = f.members();
  std::vector<Coefficient> deg;
  for (std::size_t i = 0; i < m.size(); ++i) {
    deg.push_back(degree(m[i]));
    if (!is_proper(m[i])) r.add("properness", member_loc(i), "member is not proper");
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      auto tau = m[i].tail().intersect(m[j].tail());
      auto a = meet(deg[i], tau), b = meet(deg[j], tau);
      if (a != b)
        r.add("degree", member_loc(i) + "," + std::to_string(j),
              "tau = " + str(tau) + " meets the degrees in " + str(a) + " and " + str(b));
    }
  return r;
}

bool is_open_subdivisor(const PDivisor& sub, const PDivisor& d) {
  if (sub.rank() != d.rank()) return false;
  if (!sub.tail().is_face_of(d.tail())) return false;
  std::set<PointOnP1> pts;
  for (const auto& [y, c] : sub.support()) pts.insert(y);
  for (const auto& [y, c] : d.support()) pts.insert(y);
  for (const auto& y : pts) {
    auto a = sub.at(y), b = d.at(y);
    if (a.is_empty()) continue;
    if (b.is_empty() || !is_face(a.polyhedron(), b.polyhedron())) return false;
  }
  return degree(sub) == meet(degree(d), sub.tail());
}

Report check_intersections(const DivisorialFan& f) {
  Report r;
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const auto loc = member_loc(i) + "," + std::to_string(j);
      try {
        auto d = intersect(m[i], m[j]);
        if (!is_open_subdivisor(d, m[i]) || !is_open_subdivisor(d, m[j]))
          r.add("intersection", loc, "intersection " + str(d) + " is not a face of both members");
      } catch (const Error& e) {
        r.add("intersection", loc, e.what());
      }
    }
  return r;
}

bool TailFan::is_marked(const Cone& c) const {
  return std::find(marked.begin(), marked.end(), c) != marked.end();
}

TailFan tail_fan(const DivisorialFan& f) {
  TailFan t;
  std::vector<Cone> tails;
  for (const auto& d : f.members()) tails.push_back(d.tail());
  sort_unique(tails);
  for (const auto& c : tails) {
    auto faces = c.faces();
    t.cones.insert(t.cones.end(), faces.begin(), faces.end());
  }
  sort_unique(t.cones);
  for (std::size_t i = 0; i < tails.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < tails.size(); ++j) {
      if (j == i) continue;
      if (maximal && tails[i].is_face_of(tails[j])) maximal = false;
      if (j > i) {
        auto meet = tails[i].intersect(tails[j]);
        if (!meet.is_face_of(tails[i]) || !meet.is_face_of(tails[j]))
          t.violations.add("fan", "tail fan",
                           "tails " + str(tails[i]) + " and " + str(tails[j]) +
                               " meet in a non-face " + str(meet));
      }
    }
    if (maximal) t.maximal.push_back(tails[i]);
  }
  for (const auto& s : t.maximal)
    for (const auto& d : f.members())
      if (d.tail() == s && !degree(d).is_empty()) {
        t.marked.push_back(s);
        break;
      }
  return t;
}

std::vector<Cone> marked_cones(const DivisorialFan& f) { return tail_fan(f).marked; }

Polyhedron slice_cell_for_tail(const Slice& s, const Cone& sigma) {
  std::vector<Polyhedron> found;
  for (const auto& p : s.maximal)
    if (p.tail_rays() == sigma.rays()) found.push_back(p);
  if (found.size() != 1)
    throw Error("slice rule violated: " + s.location() + " has " + std::to_string(found.size()) +
                " maximal cells with tail " + str(sigma));
  return found.front();
}

Polyhedron slice_cell_for_tail(const DivisorialFan& f, const std::optional<PointOnP1>& y,
                               const Cone& sigma) {
  if (!y) return Polyhedron::from_cone(sigma);
  std::vector<Polyhedron> cells;
  for (const auto& d : f.members())
    if (auto c = d.at(*y); !c.is_empty()) cells.push_back(c.polyhedron());
  return slice_cell_for_tail(make_slice(*y, std::move(cells)), sigma);
}

Report is_smooth_fan(const DivisorialFan& f) {
  Report r;
  auto pre = check_slice_rule(f);
  pre.merge(check_degree_rule(f));
  if (!pre.ok()) {
    r.add("precondition", "fan",
          "slice or degree rule fails (" + std::to_string(pre.findings.size()) + " findings)");
    return r;
  }
  const auto& m = f.members();
  auto smooth = parallel_map<char>(m.size(), [&](std::size_t i) { return is_smooth(m[i]); });
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!smooth[i]) r.add("smooth", member_loc(i), "member " + str(m[i]) + " is not smooth");

  auto all = slices(f);
  all.pop_back();  // the generic slice is the tail fan itself
  auto t = tail_fan(f);
  for (const auto& sigma : t.maximal) {
    const auto loc = "tail " + str(sigma);
    std::size_t non_translates = 0;
    try {
      for (const auto& s : all)
        if (!lattice_translate_of(slice_cell_for_tail(s, sigma), sigma)) ++non_translates;
    } catch (const Error& e) {
      r.add("smooth", loc, e.what());
      continue;
    }
    if (t.is_marked(sigma)) {
      if (non_translates > 2)
        r.add("smooth", loc,
              "marked cone has " + std::to_string(non_translates) +
                  " slice cells that are not lattice translates");
    } else {
      if (!sigma.is_regular()) r.add("smooth", loc, "unmarked cone is not regular");
      if (non_translates > 0)
        r.add("smooth", loc,
              "unmarked cone has " + std::to_string(non_translates) +
                  " slice cells that are not lattice translates");
    }
  }
  return r;
}

Report validate(const DivisorialFan& f) {
  Report r = check_slice_rule(f);
  r.merge(check_degree_rule(f));
  r.merge(check_intersections(f));
  r.merge(tail_fan(f).violations);
  return r;
}

}  // namespace tfan
