#include "aksara/segmentation.hpp"

#include "aksara/utf8.hpp"

namespace aksara {

namespace {

// Length of the onset the scanner would form at position p: a digraph when one
// matches (longest-match first), else a single consonant; extended by one
// medial consonant when the medial is followed by a vowel and the base onset
// is outside H ∪ M. Returns 0 when w[p] is a vowel.
std::size_t match_onset(const std::u32string& w, std::size_t p,
                        const PhonologyConfig& cfg) {
  if (cfg.is_vowel(w[p])) return 0;
  std::size_t alpha_len = 1;
  if (p + 1 < w.size() && cfg.is_digraph(std::u32string_view(w).substr(p, 2))) {
    alpha_len = 2;
  }
  bool alpha_excluded =
      cfg.is_special_coda(std::u32string_view(w).substr(p, alpha_len)) ||
      (alpha_len == 1 && cfg.is_medial(w[p]));
  if (!alpha_excluded) {
    std::size_t q = p + alpha_len;
    if (q + 1 < w.size() && cfg.is_medial(w[q]) && cfg.is_vowel(w[q + 1])) {
      return alpha_len + 1;
    }
  }
  return alpha_len;
}

// True when position p starts a unit that will receive a nucleus: either a
// vowel, or an onset directly followed by a vowel. Coda matching must not eat
// into such a unit (maximal-onset preference).
bool starts_nucleus_unit(const std::u32string& w, std::size_t p,
                         const PhonologyConfig& cfg) {
  if (p >= w.size()) return false;
  if (cfg.is_vowel(w[p])) return true;
  std::size_t len = match_onset(w, p, cfg);
  return p + len < w.size() && cfg.is_vowel(w[p + len]);
}

// Longest member of H matching at p, or 0. Guarded by the maximal-onset rule.
std::size_t match_coda(const std::u32string& w, std::size_t p,
                       const PhonologyConfig& cfg) {
  if (p >= w.size() || starts_nucleus_unit(w, p, cfg)) return 0;
  std::size_t limit = std::min(cfg.max_coda_length(), w.size() - p);
  for (std::size_t len = limit; len >= 1; --len) {
    if (cfg.is_special_coda(std::u32string_view(w).substr(p, len))) return len;
  }
  return 0;
}

}  // namespace

std::vector<Segment> scan(const std::string& word, const PhonologyConfig& cfg) {
  std::u32string w = utf8::decode(word);
  std::vector<Segment> out;
  std::size_t p = 0;
  while (p < w.size()) {
    Segment seg;
    if (!cfg.is_vowel(w[p])) {
      if (!cfg.is_consonant(w[p])) {
        throw InvalidCharacter(utf8::encode(w[p]), p, word);
      }
      std::size_t len = match_onset(w, p, cfg);
      seg.onset = utf8::encode(std::u32string_view(w).substr(p, len));
      p += len;
      if (p >= w.size() || !cfg.is_vowel(w[p])) {
        out.push_back(std::move(seg));  // isolated unit, no inherent vowel
        continue;
      }
    }
    seg.nucleus = utf8::encode(w[p]);
    ++p;
    if (std::size_t len = match_coda(w, p, cfg); len > 0) {
      seg.coda = utf8::encode(std::u32string_view(w).substr(p, len));
      p += len;
    }
    out.push_back(std::move(seg));
  }
  return out;
}

std::vector<Segment> virama_pass(std::vector<Segment> segments) {
  for (std::size_t i = segments.size(); i-- > 1;) {
    if (!segments[i].has_nucleus() && segments[i - 1].has_nucleus()) {
      segments[i - 1].coda += segments[i].surface();
      segments.erase(segments.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return segments;
}

std::vector<Segment> cluster_pass(std::vector<Segment> segments) {
  std::size_t i = 0;
  while (i + 1 < segments.size()) {
    if (!segments[i].has_nucleus()) {
      segments[i + 1].onset = segments[i].surface() + segments[i + 1].onset;
      segments.erase(segments.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  // A trailing nucleus-less unit is word-final coda material; fold it into the
  // predecessor so vowel-bearing words end up fully syllabified.
  if (segments.size() >= 2 && !segments.back().has_nucleus()) {
    segments[segments.size() - 2].coda += segments.back().surface();
    segments.pop_back();
  }
  return segments;
}

std::vector<Segment> segment(const std::string& word, const PhonologyConfig& cfg) {
  return cluster_pass(virama_pass(scan(word, cfg)));
}

std::vector<std::string> segment_surfaces(const std::string& word,
                                          const PhonologyConfig& cfg) {
  std::vector<std::string> out;
  for (const Segment& s : segment(word, cfg)) out.push_back(s.surface());
  return out;
}

}  // namespace aksara
