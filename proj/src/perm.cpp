#include "treespace/perm.hpp"

#include <map>
#include <sstream>

namespace treespace {

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(m, m, cur, out);
    return out;
}

std::string partition_key(const std::vector<int>& parts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << '+';
        os << parts[i];
    }
    return os.str();
}

std::vector<int> parse_partition_key(const std::string& key) {
    std::vector<int> parts;
    std::istringstream is(key);
    std::string tok;
    while (std::getline(is, tok, '+')) parts.push_back(std::stoi(tok));
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

Perm class_representative(int m, const std::vector<int>& parts) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 0);
    int start = 0;
    for (int p : parts) {
        for (int i = 0; i < p; ++i) v[start + i] = start + (i + 1) % p;
        start += p;
    }
    return Perm(std::move(v));
}

long long centralizer_order(const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    long long z = 1;
    for (auto [k, mk] : mult) {
        for (int i = 0; i < mk; ++i) z *= k;
        z *= factorial(mk);
    }
    return z;
}

int sign_of_class(const std::vector<int>& parts) {
    int s = 1;
    for (int p : parts)
        if (p % 2 == 0) s = -s;
    return s;
}

long long factorial(int m) {
    long long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

long long double_factorial_odd(int n) {
    long long f = 1;
    for (long long i = 2 * n - 3; i >= 1; i -= 2) f *= i;
    return f;
}

}  // namespace treespace
