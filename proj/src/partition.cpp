#include "hurwitz/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition: no parts");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition: parts must be >= 1");
    degree_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::parse(const std::string& csv) {
  std::vector<int> parts;
  std::stringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("partition: bad part '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) pos++;
    if (pos != tok.size()) throw std::invalid_argument("partition: bad part '" + tok + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("partition: empty");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); i++) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 1) throw std::invalid_argument("enumerate_partitions: d must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Largest part first keeps the output in lexicographically decreasing order.
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; p--) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

BigInt aut_count(const Partition& mu) {
  std::map<int, unsigned> mult;
  for (int p : mu.parts()) mult[p]++;
  BigInt a = 1;
  for (const auto& [part, m] : mult) a *= factorial(m);
  return a;
}

ProfileTuple::ProfileTuple(std::vector<Partition> profiles)
    : profiles_(std::move(profiles)) {
  if (profiles_.empty()) throw std::invalid_argument("profile tuple: empty");
  degree_ = profiles_.front().degree();
  for (const Partition& p : profiles_) {
    if (p.degree() != degree_)
      throw std::invalid_argument("profile tuple: mixed degrees");
  }
}

BigInt aut_count(const ProfileTuple& mu) {
  BigInt a = 1;
  for (const Partition& p : mu.profiles()) a *= aut_count(p);
  return a;
}

}  // namespace hurwitz
