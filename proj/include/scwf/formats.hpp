#pragma once

// Text formats for the finite structures.
//
// .sset       sset / max_level N / level N / cell NAME [: f0 f1 ... fn]
// .semicat    semicat / object NAME / mor NAME SRC DST / comp G F R
// .functor    functor / base PATH / carrier OBJ [e...] / map MOR SRC DST
//
// Lines are whitespace-separated; '#' starts a comment. Names are bare
// identifiers without whitespace, '#', ':' or '.' (chain names in nerves use
// '.' as the separator).

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "scwf/error.hpp"
#include "scwf/semicat.hpp"
#include "scwf/sset.hpp"

namespace scwf {

namespace fmt_detail {

inline std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

// Semicat and functor names feed into nerve chain names ('.'-joined) and
// element names ('@'-joined), so those separators are reserved there. Sset
// cell names only need to avoid the format's own punctuation.
inline void check_name(const std::string& n, const std::string& what) {
  require(!n.empty(), what + ": empty name");
  for (char c : n)
    require(c != ':' && c != '.' && c != '#',
            what + ": name '" + n + "' contains a reserved character");
}

inline void check_cell_name(const std::string& n) {
  require(!n.empty(), "sset: empty name");
  for (char c : n)
    require(c != ':' && c != '#', "sset: name '" + n + "' contains a reserved character");
}

}  // namespace fmt_detail

// --- semisimplicial sets ------------------------------------------------------

inline FinSSet parse_sset(const std::string& text) {
  auto lines = fmt_detail::tokenize_lines(text);
  require(!lines.empty() && lines[0] == std::vector<std::string>{"sset"},
          "sset: missing 'sset' header");
  size_t at = 1;
  require(at < lines.size() && lines[at].size() == 2 && lines[at][0] == "max_level",
          "sset: expected 'max_level N'");
  int max_level = std::stoi(lines[at][1]);
  require(max_level >= 0, "sset: max_level must be >= 0");
  ++at;
  FinSSet a = FinSSet::empty(max_level);
  int level = -1;
  for (; at < lines.size(); ++at) {
    const auto& t = lines[at];
    if (t[0] == "level") {
      require(t.size() == 2, "sset: expected 'level N'");
      level = std::stoi(t[1]);
      require(level >= 0 && level <= max_level, "sset: level out of range");
      continue;
    }
    require(t[0] == "cell", "sset: unexpected directive '" + t[0] + "'");
    require(level >= 0, "sset: cell before any level directive");
    require(t.size() >= 2, "sset: cell needs a name");
    fmt_detail::check_cell_name(t[1]);
    require(a.find_cell(level, t[1]) < 0, "sset: duplicate cell name " + t[1]);
    std::vector<int> faces;
    if (level == 0) {
      require(t.size() == 2, "sset: level-0 cells take no faces");
    } else {
      require(t.size() == (size_t)level + 4 && t[2] == ":",
              "sset: cell at level " + std::to_string(level) + " needs " +
                  std::to_string(level + 1) + " faces after ':'");
      for (size_t i = 3; i < t.size(); ++i) {
        int f = a.find_cell(level - 1, t[i]);
        require(f >= 0, "sset: unknown face cell " + t[i]);
        faces.push_back(f);
      }
    }
    a.add_cell(level, t[1], std::move(faces));
  }
  return a;
}

inline std::string write_sset(const FinSSet& a) {
  std::string out = "sset\nmax_level " + std::to_string(a.max_level) + "\n";
  for (int n = 0; n <= a.max_level; ++n) {
    out += "level " + std::to_string(n) + "\n";
    for (int c = 0; c < a.cell_count(n); ++c) {
      out += "cell " + a.names[n][c];
      if (n >= 1) {
        out += " :";
        for (int f : a.faces[n][c]) out += " " + a.names[n - 1][f];
      }
      out += "\n";
    }
  }
  return out;
}

// --- semicategories -----------------------------------------------------------

inline FinSemicat parse_semicat(const std::string& text) {
  auto lines = fmt_detail::tokenize_lines(text);
  require(!lines.empty() && lines[0] == std::vector<std::string>{"semicat"},
          "semicat: missing 'semicat' header");
  std::vector<std::string> objects;
  std::vector<FinSemicat::Mor> mors;
  std::vector<std::array<std::string, 3>> comps;
  for (size_t at = 1; at < lines.size(); ++at) {
    const auto& t = lines[at];
    if (t[0] == "object") {
      require(t.size() == 2, "semicat: expected 'object NAME'");
      fmt_detail::check_name(t[1], "semicat");
      objects.push_back(t[1]);
    } else if (t[0] == "mor") {
      require(t.size() == 4, "semicat: expected 'mor NAME SRC DST'");
      fmt_detail::check_name(t[1], "semicat");
      int s = -1, d = -1;
      for (int i = 0; i < (int)objects.size(); ++i) {
        if (objects[i] == t[2]) s = i;
        if (objects[i] == t[3]) d = i;
      }
      require(s >= 0 && d >= 0, "semicat: unknown object in mor " + t[1]);
      mors.push_back({s, d, t[1]});
    } else if (t[0] == "comp") {
      require(t.size() == 4, "semicat: expected 'comp G F RESULT'");
      comps.push_back({t[1], t[2], t[3]});
    } else {
      throw error("semicat: unexpected directive '" + t[0] + "'");
    }
  }
  auto mor_index = [&](const std::string& n) {
    for (int i = 0; i < (int)mors.size(); ++i)
      if (mors[i].name == n) return i;
    throw error("semicat: unknown morphism " + n);
  };
  std::vector<std::vector<int>> table(mors.size(), std::vector<int>(mors.size(), -1));
  for (const auto& [g, f, r] : comps) {
    int gi = mor_index(g), fi = mor_index(f), ri = mor_index(r);
    require(table[gi][fi] == -1, "semicat: duplicate comp entry " + g + " " + f);
    table[gi][fi] = ri;
  }
  return FinSemicat::make(std::move(objects), std::move(mors), std::move(table));
}

inline std::string write_semicat(const FinSemicat& c) {
  std::string out = "semicat\n";
  for (const auto& o : c.objects) out += "object " + o + "\n";
  for (const auto& m : c.mors)
    out += "mor " + m.name + " " + c.objects[m.src] + " " + c.objects[m.dst] + "\n";
  for (size_t g = 0; g < c.mors.size(); ++g)
    for (size_t f = 0; f < c.mors.size(); ++f)
      if (c.comp[g][f] >= 0)
        out += "comp " + c.mors[g].name + " " + c.mors[f].name + " " +
               c.mors[c.comp[g][f]].name + "\n";
  return out;
}

// --- functors -------------------------------------------------------------------

struct FunctorFile {
  std::string base_path;  // as written in the file
  FinSetFunctor functor;  // with base loaded
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FunctorFile parse_functor(const std::string& text, const std::string& dir) {
  auto lines = fmt_detail::tokenize_lines(text);
  require(!lines.empty() && lines[0] == std::vector<std::string>{"functor"},
          "functor: missing 'functor' header");
  size_t at = 1;
  require(at < lines.size() && lines[at].size() == 2 && lines[at][0] == "base",
          "functor: expected 'base PATH'");
  std::string base_path = lines[at][1];
  std::string resolved = dir.empty() ? base_path : dir + "/" + base_path;
  FinSemicat base = parse_semicat(slurp(resolved));
  ++at;
  std::vector<std::vector<std::string>> carrier(base.objects.size());
  std::vector<bool> carrier_seen(base.objects.size(), false);
  // action by names until all carriers are known
  std::vector<std::array<std::string, 3>> maps;
  for (; at < lines.size(); ++at) {
    const auto& t = lines[at];
    if (t[0] == "carrier") {
      require(t.size() >= 2, "functor: expected 'carrier OBJ [elements...]'");
      int obj = base.find_object(t[1]);
      require(obj >= 0, "functor: unknown object " + t[1]);
      require(!carrier_seen[obj], "functor: duplicate carrier for " + t[1]);
      carrier_seen[obj] = true;
      for (size_t i = 2; i < t.size(); ++i) {
        fmt_detail::check_name(t[i], "functor");
        carrier[obj].push_back(t[i]);
      }
    } else if (t[0] == "map") {
      require(t.size() == 4, "functor: expected 'map MOR SRC_ELEM DST_ELEM'");
      maps.push_back({t[1], t[2], t[3]});
    } else {
      throw error("functor: unexpected directive '" + t[0] + "'");
    }
  }
  for (size_t i = 0; i < carrier_seen.size(); ++i)
    require(carrier_seen[i], "functor: missing carrier for object " + base.objects[i]);
  std::vector<std::vector<int>> action(base.mors.size());
  std::vector<std::vector<bool>> assigned;
  for (const auto& m : base.mors) {
    action[&m - base.mors.data()].assign(carrier[m.src].size(), -1);
    assigned.push_back(std::vector<bool>(carrier[m.src].size(), false));
  }
  auto elem_index = [&](int obj, const std::string& n) {
    for (int i = 0; i < (int)carrier[obj].size(); ++i)
      if (carrier[obj][i] == n) return i;
    throw error("functor: unknown element " + n + " of " + base.objects[obj]);
  };
  for (const auto& [mor, se, de] : maps) {
    int m = base.find_mor(mor);
    require(m >= 0, "functor: unknown morphism " + mor);
    int si = elem_index(base.mors[m].src, se);
    int di = elem_index(base.mors[m].dst, de);
    require(!assigned[m][si], "functor: duplicate map entry for " + mor + " " + se);
    assigned[m][si] = true;
    action[m][si] = di;
  }
  for (size_t m = 0; m < action.size(); ++m)
    for (size_t i = 0; i < action[m].size(); ++i)
      require(assigned[m][i], "functor: missing map entry for " + base.mors[m].name +
                                  " at element " + carrier[base.mors[m].src][i]);
  FunctorFile out;
  out.base_path = base_path;
  out.functor = FinSetFunctor::make(std::move(base), std::move(carrier), std::move(action));
  return out;
}

}  // namespace scwf
