#include "anyons/braid_word.hpp"

#include <cctype>
#include <sstream>

namespace anyons {

namespace {

void check_gen(const BraidGen& g, int num_strands) {
  int limit = (g.kind == BraidGen::Kind::Sigma) ? num_strands - 1 : num_strands;
  if (g.index < 0 || g.index >= limit)
    throw InputError("braid generator index out of range: " +
                     std::string(g.kind == BraidGen::Kind::Sigma ? "s" : "t") +
                     std::to_string(g.index + 1) + " on " +
                     std::to_string(num_strands) + " strands");
}

}  // namespace

FramedBraidWord FramedBraidWord::parse(const std::string& text,
                                       int num_strands) {
  if (num_strands < 0) throw InputError("negative strand count");
  FramedBraidWord w;
  w.num_strands = num_strands;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    BraidGen g;
    if (tok[0] == 's')
      g.kind = BraidGen::Kind::Sigma;
    else if (tok[0] == 't')
      g.kind = BraidGen::Kind::Twist;
    else
      throw InputError("bad braid token \"" + tok +
                       "\": expected s<k>, t<k>, optionally ^<power>, or e");
    size_t pos = 1;
    auto read_int = [&](bool allow_sign) {
      size_t start = pos;
      if (allow_sign && pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+'))
        ++pos;
      while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
        ++pos;
      if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(tok[start]))))
        throw InputError("bad number in braid token \"" + tok + "\"");
      return std::stoi(tok.substr(start, pos - start));
    };
    g.index = read_int(false) - 1;
    g.power = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^')
        throw InputError("bad braid token \"" + tok + "\"");
      ++pos;
      g.power = read_int(true);
      if (pos != tok.size())
        throw InputError("bad braid token \"" + tok + "\"");
    }
    check_gen(g, num_strands);
    if (g.power != 0) w.append(g);
  }
  return w;
}

std::string FramedBraidWord::to_string() const {
  if (gens.empty()) return "e";
  std::string out;
  for (const BraidGen& g : gens) {
    if (!out.empty()) out += ' ';
    out += (g.kind == BraidGen::Kind::Sigma) ? 's' : 't';
    out += std::to_string(g.index + 1);
    if (g.power != 1) out += "^" + std::to_string(g.power);
  }
  return out;
}

void FramedBraidWord::append(BraidGen g) {
  check_gen(g, num_strands);
  if (g.power == 0) return;
  if (!gens.empty() && gens.back().kind == g.kind &&
      gens.back().index == g.index) {
    gens.back().power += g.power;
    if (gens.back().power == 0) gens.pop_back();
    return;
  }
  gens.push_back(g);
}

void FramedBraidWord::append(const FramedBraidWord& other) {
  if (other.num_strands != num_strands)
    throw InputError("cannot append a word on " +
                     std::to_string(other.num_strands) + " strands to one on " +
                     std::to_string(num_strands));
  for (const BraidGen& g : other.gens) append(g);
}

FramedBraidWord FramedBraidWord::inverse() const {
  FramedBraidWord w;
  w.num_strands = num_strands;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    w.append(BraidGen{it->kind, it->index, -it->power});
  return w;
}

std::vector<int> FramedBraidWord::strand_permutation() const {
  std::vector<int> at(num_strands);
  for (int i = 0; i < num_strands; ++i) at[i] = i;
  for (const BraidGen& g : gens)
    if (g.kind == BraidGen::Kind::Sigma && (g.power % 2 != 0))
      std::swap(at[g.index], at[g.index + 1]);
  return at;
}

}  // namespace anyons
