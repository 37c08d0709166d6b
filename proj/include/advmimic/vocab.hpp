#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "advmimic/util.hpp"

namespace advmimic {

using TokenSeq = std::vector<int>;

// Word-level vocabulary with a fixed block of special tokens at the front.
class Vocab {
 public:
  static constexpr const char* kPad = "[pad]";
  static constexpr const char* kBos = "[bos]";
  static constexpr const char* kEos = "[eos]";
  static constexpr const char* kUnk = "[unk]";
  static constexpr const char* kSep = "[sep]";
  static constexpr const char* kRec = "[rec]";   // reconstruction task marker
  static constexpr const char* kTsk = "[tsk]";   // classification task marker
  static constexpr const char* kLab = "[lab]";   // label-conditioning delimiter
  static constexpr const char* kCls = "[cls]";

  Vocab() {
    for (const char* s : {kPad, kBos, kEos, kUnk, kSep, kRec, kTsk, kLab, kCls}) {
      add(s);
    }
  }

  int add(const std::string& word) {
    auto it = index_.find(word);
    if (it != index_.end()) return it->second;
    const int id = static_cast<int>(words_.size());
    words_.push_back(word);
    index_.emplace(word, id);
    return id;
  }

  bool contains(const std::string& word) const { return index_.count(word) > 0; }

  int id(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) {
      throw std::runtime_error("vocab: unknown token '" + word + "'");
    }
    return it->second;
  }

  // Lookup with [unk] fallback, for ingested real-world text.
  int id_or_unk(const std::string& word) const {
    auto it = index_.find(word);
    return it == index_.end() ? index_.at(kUnk) : it->second;
  }

  const std::string& word(int id) const {
    if (id < 0 || id >= static_cast<int>(words_.size())) {
      throw std::runtime_error("vocab: token id out of range: " + std::to_string(id));
    }
    return words_[static_cast<std::size_t>(id)];
  }

  int size() const { return static_cast<int>(words_.size()); }

  int pad() const { return index_.at(kPad); }
  int bos() const { return index_.at(kBos); }
  int eos() const { return index_.at(kEos); }
  int unk() const { return index_.at(kUnk); }
  int sep() const { return index_.at(kSep); }
  int rec() const { return index_.at(kRec); }
  int tsk() const { return index_.at(kTsk); }
  int lab() const { return index_.at(kLab); }
  int cls() const { return index_.at(kCls); }

  TokenSeq encode(const std::vector<std::string>& words, bool strict = true) const {
    TokenSeq out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(strict ? id(w) : id_or_unk(w));
    return out;
  }

  TokenSeq encode_text(const std::string& text, bool strict = false) const {
    return encode(split_ws(text), strict);
  }

  std::vector<std::string> decode(const TokenSeq& toks) const {
    std::vector<std::string> out;
    out.reserve(toks.size());
    for (int t : toks) out.push_back(word(t));
    return out;
  }

  std::string detokenize(const TokenSeq& toks) const { return join(decode(toks)); }

  // Frequency-cut vocabulary over a corpus of whitespace-tokenized texts.
  static Vocab build(const std::vector<std::string>& texts, std::size_t max_size = 2048) {
    std::map<std::string, std::size_t> freq;
    for (const auto& t : texts) {
      for (const auto& w : split_ws(t)) ++freq[lower(w)];
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(freq.begin(), freq.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    Vocab v;
    for (const auto& [w, n] : ranked) {
      if (static_cast<std::size_t>(v.size()) >= max_size) break;
      v.add(w);
    }
    return v;
  }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace advmimic
