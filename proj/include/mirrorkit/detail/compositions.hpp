#ifndef MIRRORKIT_DETAIL_COMPOSITIONS_HPP
#define MIRRORKIT_DETAIL_COMPOSITIONS_HPP

#include <vector>

namespace mirrorkit {

namespace detail {

template <class Fn>
void compositions_rec(std::vector<long>& parts, std::size_t pos, long remaining, Fn& fn) {
  if (pos + 1 == parts.size()) {
    parts[pos] = remaining;
    fn(static_cast<const std::vector<long>&>(parts));
    return;
  }
  for (long v = remaining; v >= 0; --v) {
    parts[pos] = v;
    compositions_rec(parts, pos + 1, remaining - v, fn);
  }
}

}  // namespace detail

template <class Fn>
void for_each_composition(long total, std::size_t count, Fn&& fn) {
  if (total < 0 || count == 0) {
    if (total == 0 && count == 0) {
      std::vector<long> empty;
      fn(static_cast<const std::vector<long>&>(empty));
    }
    return;
  }
  std::vector<long> parts(count, 0);
  detail::compositions_rec(parts, 0, total, fn);
}

}  // namespace mirrorkit

#endif  // MIRRORKIT_DETAIL_COMPOSITIONS_HPP
