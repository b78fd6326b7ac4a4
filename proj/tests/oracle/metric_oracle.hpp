#pragma once

// Straight-from-formula reference implementations of the layout model and the
// ten metrics. Shares only plain data types with the library; font data comes
// from the sidecar JSON read here directly.

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "typoster/core_model.hpp"

namespace oracle {

struct Face {
  std::string id;
  std::string category;
  double upm = 1000;
  double wmin = 0, wmax = 0, smin = 0, smax = 0;
  // corner tables keyed by "wMin,sMin" etc.
  std::map<std::string, nlohmann::json> tables;

  double corner_advance(const std::string& key, char32_t cp) const {
    const auto& t = tables.at(key);
    std::string ch;
    // encode cp as UTF-8 to look up
    if (cp < 0x80) {
      ch.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      ch.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      ch.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      ch.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      ch.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      ch.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      ch.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      ch.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      ch.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      ch.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    if (t.contains(ch)) return t.at(ch).get<double>();
    return t.at("default").get<double>();
  }

  // Bilinear blend over normalized weight/stretch.
  double advance(char32_t cp, double w, double s) const {
    const double tw = wmax > wmin ? (std::clamp(w, wmin, wmax) - wmin) / (wmax - wmin) : 0.0;
    const double ts = smax > smin ? (std::clamp(s, smin, smax) - smin) / (smax - smin) : 0.0;
    auto get = [&](const char* key, const char* alt1, const char* alt2) {
      if (tables.contains(key)) return corner_advance(key, cp);
      if (tables.contains(alt1)) return corner_advance(alt1, cp);
      return corner_advance(alt2, cp);
    };
    const double a00 = get("wMin,sMin", "wMax,sMin", "wMin,sMax");
    const double a10 = get("wMax,sMin", "wMin,sMin", "wMax,sMax");
    const double a01 = get("wMin,sMax", "wMin,sMin", "wMax,sMax");
    const double a11 = get("wMax,sMax", "wMax,sMin", "wMin,sMax");
    return (1 - tw) * (1 - ts) * a00 + tw * (1 - ts) * a10 + (1 - tw) * ts * a01 + tw * ts * a11;
  }
};

inline Face load_face(const std::filesystem::path& path) {
  std::ifstream in(path);
  nlohmann::json j;
  in >> j;
  Face f;
  f.id = j["id"];
  f.category = j["category"];
  f.upm = j["unitsPerEm"];
  if (j.contains("weightAxis")) {
    f.wmin = j["weightAxis"][0];
    f.wmax = j["weightAxis"][2];
  } else {
    f.wmin = f.wmax = 400;
  }
  if (j.contains("stretchAxis")) {
    f.smin = j["stretchAxis"][0];
    f.smax = j["stretchAxis"][2];
  } else {
    f.smin = f.smax = 100;
  }
  for (auto& [k, v] : j["advances"].items()) {
    f.tables[k.substr(std::string("corner:").size())] = v;
  }
  return f;
}

inline std::u32string decode(const std::string& s) {
  std::u32string out;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) {
      out.push_back(c);
      i += 1;
    } else if ((c >> 5) == 6) {
      out.push_back(((c & 0x1F) << 6) | (s[i + 1] & 0x3F));
      i += 2;
    } else if ((c >> 4) == 14) {
      out.push_back(((c & 0x0F) << 12) | ((s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F));
      i += 3;
    } else {
      out.push_back(((c & 0x07) << 18) | ((s[i + 1] & 0x3F) << 12) | ((s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F));
      i += 4;
    }
  }
  return out;
}

struct Box {
  double x, y, w, h, text_w, size, cov;
};

struct Layout {
  std::vector<Box> boxes;
  double avail_w, avail_h, grid_h, top_margin, bottom_margin, left_margin, right_margin;
};

inline Layout layout(const typoster::PosterGenotype& g, const std::map<std::string, Face>& faces,
                     double line_height = 1.2) {
  Layout L;
  const double W = g.size.width;
  L.left_margin = W * g.margins.left / 100;
  L.right_margin = W * g.margins.right / 100;
  L.top_margin = W * g.margins.top / 100;
  L.bottom_margin = W * g.margins.bottom / 100;
  L.avail_w = W - L.left_margin - L.right_margin;
  L.avail_h = g.size.height - L.top_margin - L.bottom_margin;
  L.grid_h = 0;
  for (const auto& tb : g.textboxes) {
    const Face& f = faces.at(tb.typeface);
    double units = 0;
    for (char32_t cp : decode(tb.content)) units += f.advance(cp, tb.weight, tb.stretch);
    Box b{};
    b.x = L.left_margin;
    b.w = L.avail_w;
    b.h = tb.size * line_height;
    b.size = tb.size;
    b.text_w = units * tb.size / f.upm;
    const double nw = f.wmax > f.wmin ? (tb.weight - f.wmin) / (f.wmax - f.wmin) : 0.0;
    b.cov = b.w * b.h > 0 ? std::clamp(b.text_w * 0.7 * tb.size * (0.2 + 0.4 * nw) / (b.w * b.h), 0.0, 1.0) : 0.0;
    L.grid_h += b.h;
    L.boxes.push_back(b);
  }
  double top = L.top_margin;
  if (g.vertical_alignment == typoster::VerticalAlignment::middle) top += (L.avail_h - L.grid_h) / 2;
  if (g.vertical_alignment == typoster::VerticalAlignment::bottom) top += L.avail_h - L.grid_h;
  for (auto& b : L.boxes) {
    b.y = top;
    top += b.h;
  }
  return L;
}

inline double c01(double v) { return std::min(1.0, std::max(0.0, v)); }

inline double legibility(const Layout& L) {
  double sum = 0;
  for (const auto& b : L.boxes) {
    sum += b.text_w <= L.avail_w ? 1.0 : std::max(0.0, 1 - (b.text_w - L.avail_w) / L.avail_w);
  }
  return sum / L.boxes.size();
}

inline double grid(const Layout& L, const typoster::PosterGenotype& g) {
  return (L.grid_h + L.top_margin + L.bottom_margin <= g.size.height + 1e-9) ? 1.0 : 0.0;
}

inline double alignment(const Layout& L, const typoster::PosterGenotype& g, double A = 10) {
  double d = 0;
  const std::size_t n = L.boxes.size();
  for (std::size_t i = 1; i < n; ++i) d += std::fabs(L.boxes[i].text_w - L.boxes[i - 1].text_w);
  if (n > 1) d /= (n - 1);
  std::set<int> kinds;
  for (const auto& tb : g.textboxes) kinds.insert(static_cast<int>(tb.alignment));
  return 0.8 * (A / (A + d)) + 0.2 / kinds.size();
}

inline double regularity(const Layout& L, double A = 10) {
  const std::size_t n = L.boxes.size();
  if (n <= 2) return 1.0;
  std::vector<double> p;
  for (std::size_t i = 1; i < n; ++i) p.push_back(L.boxes[i].y - L.boxes[i - 1].y);
  double d = 0;
  for (std::size_t i = 1; i < p.size(); ++i) d += std::fabs(p[i] - p[i - 1]);
  d /= (p.size() - 1);
  return A / (A + d);
}

inline double balance(const Layout& L, const typoster::PosterGenotype& g, const typoster::Rgb& fg,
                      const typoster::Rgb& bg) {
  auto ax = [](typoster::Alignment a, double left, double w) {
    return a == typoster::Alignment::left ? left : a == typoster::Alignment::center ? left + w / 2 : left + w;
  };
  auto ay = [&](double top, double h) {
    switch (g.vertical_alignment) {
      case typoster::VerticalAlignment::top:
        return top;
      case typoster::VerticalAlignment::middle:
        return top + h / 2 - h / 12;
      default:
        return top + h;
    }
  };
  double sw = 0, sx = 0, sy = 0, ux = 0, uy = 0;
  for (std::size_t i = 0; i < L.boxes.size(); ++i) {
    const auto& b = L.boxes[i];
    const double r = b.cov * fg.r + (1 - b.cov) * bg.r;
    const double gg = b.cov * fg.g + (1 - b.cov) * bg.g;
    const double bl = b.cov * fg.b + (1 - b.cov) * bg.b;
    const double lum = 0.2126 * r + 0.7152 * gg + 0.0722 * bl;
    const double od = std::log10(std::max(1.0, lum));
    const double vw = b.w * b.h * od;
    const double x = ax(g.textboxes[i].alignment, b.x, b.w);
    const double y = ay(b.y, b.h);
    sw += vw;
    sx += vw * x;
    sy += vw * y;
    ux += x;
    uy += y;
  }
  double wx, wy;
  if (sw > 0) {
    wx = sx / sw;
    wy = sy / sw;
  } else {
    wx = ux / L.boxes.size();
    wy = uy / L.boxes.size();
  }
  const double cx = ax(g.textboxes[0].alignment, 0, g.size.width);
  const double cy = ay(0, g.size.height);
  const double B = 1 - std::sqrt((std::pow((wx - cx) / g.size.width, 2) + std::pow((wy - cy) / g.size.height, 2)) / 2);
  return c01(B);
}

inline double justification(const Layout& L, double J = 3) {
  double sum = 0;
  for (const auto& b : L.boxes) {
    double diff = std::fabs(b.text_w - L.avail_w);
    if (b.text_w <= L.avail_w) diff /= J;
    sum += std::max(0.0, 1 - diff / L.avail_w);
  }
  return sum / L.boxes.size();
}

inline double pairing(const typoster::PosterGenotype& g, const std::map<std::string, Face>& faces) {
  std::set<std::string> used, cats;
  for (const auto& tb : g.textboxes) {
    used.insert(tb.typeface);
    cats.insert(faces.at(tb.typeface).category);
  }
  const double U = used.size(), C = cats.size();
  return U <= 1 ? 1.0 : c01((U - C) / (U - 1));
}

inline double negative_space(const Layout& L, const typoster::PosterGenotype& g, double optimal = 50) {
  double ink = 0;
  for (const auto& b : L.boxes) ink += b.cov * b.w * b.h;
  const double bgp = 100 * (1 - ink / (g.size.width * g.size.height));
  return std::max(0.0, 1 - std::fabs(bgp - optimal) / optimal);
}

inline std::vector<double> optimal_heights(const std::vector<int>& charges) {
  double total = 0;
  for (int c : charges) total += 1 + c;
  std::vector<double> h;
  for (int c : charges) h.push_back(100.0 * (1 + c) / total);
  return h;
}

inline double semantic_layout(const Layout& L, const std::vector<int>& charges, bool relative = false) {
  const auto opt = optimal_heights(charges);
  const double ref = relative ? L.grid_h : L.avail_h;
  if (ref <= 0) return 0.0;
  double sum = 0;
  for (std::size_t i = 0; i < L.boxes.size(); ++i) {
    sum += c01(1 - std::fabs(100 * L.boxes[i].h / ref - opt[i]) / 100);
  }
  return sum / L.boxes.size();
}

inline double semantic_typography(const typoster::PosterGenotype& g, const std::map<std::string, Face>& faces,
                                  const std::vector<int>& charges, double threshold = 0.2) {
  const std::size_t n = g.textboxes.size();
  std::size_t ref = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (charges[i] < charges[ref]) ref = i;
  const int cmin = *std::min_element(charges.begin(), charges.end());
  const int cmax = *std::max_element(charges.begin(), charges.end());
  const Face& rf = faces.at(g.textboxes[ref].typeface);

  std::array<double, 3> score{}, emph{};
  for (int feat = 0; feat < 2; ++feat) {
    auto val = [&](std::size_t i) { return feat == 0 ? g.textboxes[i].weight : g.textboxes[i].stretch; };
    double lo = val(0), hi = val(0);
    for (std::size_t i = 0; i < n; ++i) {
      lo = std::min(lo, val(i));
      hi = std::max(hi, val(i));
    }
    const double range = feat == 0 ? rf.wmax - rf.wmin : rf.smax - rf.smin;
    double s = 0, e = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double expected = cmax == cmin ? 0.0 : (hi - lo) * (charges[i] - cmin) / double(cmax - cmin);
      const double current = std::fabs(val(i) - val(ref));
      s += range == 0 ? 1.0 : c01(1 - std::fabs(current - expected) / range);
      e += range == 0 ? 0.0 : current / range;
    }
    score[feat] = s / n;
    emph[feat] = e / n;
  }
  // Type design: first-used typeface per charge level; a face owned by another level -> undefined.
  std::map<int, std::string> level_face;
  std::set<int> undefined;
  std::map<std::string, int> owner;
  for (std::size_t i = 0; i < n; ++i) {
    const int lv = charges[i];
    if (level_face.contains(lv) || undefined.contains(lv)) continue;
    const auto& tf = g.textboxes[i].typeface;
    if (owner.contains(tf) && owner[tf] != lv) {
      undefined.insert(lv);
    } else {
      level_face[lv] = tf;
      owner[tf] = lv;
    }
  }
  double dev = 0, diff_ref = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int lv = charges[i];
    if (level_face.contains(lv) && level_face[lv] != g.textboxes[i].typeface) dev += 1;
    if (g.textboxes[i].typeface != g.textboxes[ref].typeface) diff_ref += 1;
  }
  score[2] = 1 - dev / n;
  emph[2] = diff_ref / n;
  double overall = std::max({score[0], score[1], score[2]});
  int over = 0;
  for (double e : emph)
    if (e > threshold) ++over;
  if (over >= 2) overall /= over;
  return c01(overall);
}

}  // namespace oracle
