#ifndef CRFAE_CORPUS_H
#define CRFAE_CORPUS_H

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace crfae {

// String interner. Id 0 is reserved for the UNK sentinel.
class Vocab {
 public:
  Vocab() { add(kUnkSymbol); }

  int add(const std::string& s) {
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(symbols_.size());
    symbols_.push_back(s);
    index_.emplace(s, id);
    return id;
  }
  // Returns kUnk for unseen symbols.
  int lookup(const std::string& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? kUnk : it->second;
  }
  const std::string& symbol(int id) const { return symbols_.at(id); }
  int size() const { return static_cast<int>(symbols_.size()); }

  static constexpr int kUnk = 0;
  static constexpr const char* kUnkSymbol = "<unk>";

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> index_;
};

struct Sentence {
  std::vector<int> tokens;  // observation ids
  std::vector<int> recon;   // reconstruction ids, same length
  std::vector<int> gold;    // gold tag ids (empty when unannotated)
};

struct Corpus {
  std::vector<Sentence> sentences;
  Vocab tag_vocab;  // gold tags, when loaded
};

struct BitextPair {
  std::vector<int> source;  // side information
  Sentence target;
};

struct BitextCorpus {
  std::vector<BitextPair> pairs;
};

// Word -> Brown cluster id. Total via the UNK cluster.
class ClusterMap {
 public:
  Vocab clusters;                                  // cluster-id vocab (bitstrings)
  std::unordered_map<std::string, int> word_to_cluster;

  int cluster_of(const std::string& word) const {
    auto it = word_to_cluster.find(word);
    return it == word_to_cluster.end() ? Vocab::kUnk : it->second;
  }
};

struct GoldAlignment {
  std::set<std::pair<int, int>> sure;      // (src, tgt), 0-based
  std::set<std::pair<int, int>> possible;  // superset of sure
};

// Loaders throw std::runtime_error with the offending line number.
std::pair<Corpus, Vocab> load_text_corpus(const std::string& path,
                                          const std::string& gold_path = "");
struct Bitext {
  BitextCorpus corpus;
  Vocab source_vocab;
  Vocab target_vocab;
};
Bitext load_bitext(const std::string& path);
ClusterMap load_cluster_map(const std::string& path);
std::vector<GoldAlignment> load_gold_alignments(const std::string& path);

// Pharaoh "i-j" link files (one line per sentence).
std::vector<std::set<std::pair<int, int>>> load_pharaoh(const std::string& path);
void write_pharaoh(const std::vector<std::set<std::pair<int, int>>>& links,
                   const std::string& path);

// x_hat_i = pi(x_i). With a null map, the identity transform (x_hat = x).
void apply_reconstruction_transform(Corpus* corpus, const Vocab& token_vocab,
                                    const ClusterMap* map, Vocab* recon_vocab);
void apply_reconstruction_transform(BitextCorpus* corpus, const Vocab& token_vocab,
                                    const ClusterMap* map, Vocab* recon_vocab);

}  // namespace crfae

#endif  // CRFAE_CORPUS_H
