#ifndef LAD_CORPUS_HPP
#define LAD_CORPUS_HPP

#include <string>
#include <vector>

namespace lad {

// A builtin diagram with its expected classification and discreteness
// verdict. The first seven entries are the reference examples; the last two
// are small auxiliary diagrams.
struct CorpusEntry {
  std::string name;
  std::string source;
  std::string expected_type;      // FixedVertex, Inversion, ...
  bool expected_discrete = false;
};

const std::vector<CorpusEntry>& corpus();

// Throws Error for unknown names.
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace lad

#endif
