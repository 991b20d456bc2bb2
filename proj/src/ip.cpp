#include "hostprobe/ip.hpp"

#include <arpa/inet.h>

#include <algorithm>
#include <cstring>

namespace hostprobe {

std::optional<IpAddress> IpAddress::parse(const std::string& text) {
    IpAddress ip;
    in_addr a4{};
    if (inet_pton(AF_INET, text.c_str(), &a4) == 1) {
        ip.family_ = Family::v4;
        std::memcpy(ip.bytes_.data(), &a4, 4);
        return ip;
    }
    in6_addr a6{};
    if (inet_pton(AF_INET6, text.c_str(), &a6) == 1) {
        ip.family_ = Family::v6;
        std::memcpy(ip.bytes_.data(), &a6, 16);
        return ip;
    }
    return std::nullopt;
}

IpAddress IpAddress::from_v4_bytes(const std::array<uint8_t, 4>& b) {
    IpAddress ip;
    ip.family_ = Family::v4;
    std::copy(b.begin(), b.end(), ip.bytes_.begin());
    return ip;
}

IpAddress IpAddress::from_v6_bytes(const std::array<uint8_t, 16>& b) {
    IpAddress ip;
    ip.family_ = Family::v6;
    ip.bytes_ = b;
    return ip;
}

std::string IpAddress::to_string() const {
    char buf[INET6_ADDRSTRLEN] = {};
    if (family_ == Family::v4) {
        inet_ntop(AF_INET, bytes_.data(), buf, sizeof(buf));
    } else {
        inet_ntop(AF_INET6, bytes_.data(), buf, sizeof(buf));
    }
    return buf;
}

bool IpAddress::is_loopback() const {
    if (family_ == Family::v4) return bytes_[0] == 127;
    static const std::array<uint8_t, 16> v6lo = {0, 0, 0, 0, 0, 0, 0, 0,
                                                 0, 0, 0, 0, 0, 0, 0, 1};
    return bytes_ == v6lo;
}

bool IpAddress::is_private() const {
    if (family_ == Family::v4) {
        if (bytes_[0] == 10) return true;
        if (bytes_[0] == 172 && (bytes_[1] & 0xf0) == 16) return true;
        if (bytes_[0] == 192 && bytes_[1] == 168) return true;
        if (bytes_[0] == 100 && (bytes_[1] & 0xc0) == 64) return true;  // CGNAT
        return false;
    }
    return (bytes_[0] & 0xfe) == 0xfc;  // fc00::/7
}

bool IpAddress::is_link_local() const {
    if (family_ == Family::v4) return bytes_[0] == 169 && bytes_[1] == 254;
    return bytes_[0] == 0xfe && (bytes_[1] & 0xc0) == 0x80;  // fe80::/10
}

bool IpAddress::is_multicast() const {
    if (family_ == Family::v4) return (bytes_[0] & 0xf0) == 0xe0;
    return bytes_[0] == 0xff;
}

bool IpAddress::is_unspecified() const {
    size_t n = byte_count();
    for (size_t i = 0; i < n; ++i)
        if (bytes_[i] != 0) return false;
    return true;
}

bool IpAddress::is_global_unicast() const {
    return !is_loopback() && !is_private() && !is_link_local() && !is_multicast() &&
           !is_unspecified();
}

int IpAddress::bit(size_t i) const {
    return (bytes_[i / 8] >> (7 - i % 8)) & 1;
}

namespace {

int bit_width(const IpAddress& ip) {
    return ip.family() == IpAddress::Family::v4 ? 32 : 128;
}

std::array<uint8_t, 16> mask_bytes(const std::array<uint8_t, 16>& b, int prefix_len) {
    std::array<uint8_t, 16> out = b;
    for (int i = 0; i < 16; ++i) {
        int bits = std::clamp(prefix_len - i * 8, 0, 8);
        uint8_t mask = bits == 0 ? 0 : static_cast<uint8_t>(0xff << (8 - bits));
        out[static_cast<size_t>(i)] &= mask;
    }
    return out;
}

}  // namespace

Cidr::Cidr(IpAddress base, int prefix_len) : prefix_len_(prefix_len) {
    auto masked = mask_bytes(base.bytes(), prefix_len);
    base_ = base.family() == IpAddress::Family::v4
                ? IpAddress::from_v4_bytes({masked[0], masked[1], masked[2], masked[3]})
                : IpAddress::from_v6_bytes(masked);
}

std::optional<Cidr> Cidr::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return std::nullopt;
    auto ip = IpAddress::parse(text.substr(0, slash));
    if (!ip) return std::nullopt;
    int len = 0;
    try {
        len = std::stoi(text.substr(slash + 1));
    } catch (...) {
        return std::nullopt;
    }
    if (len < 0 || len > bit_width(*ip)) return std::nullopt;
    return Cidr(*ip, len);
}

bool Cidr::contains(const IpAddress& ip) const {
    if (ip.family() != base_.family()) return false;
    for (int i = 0; i < prefix_len_; ++i)
        if (ip.bit(static_cast<size_t>(i)) != base_.bit(static_cast<size_t>(i)))
            return false;
    return true;
}

std::string Cidr::to_string() const {
    return base_.to_string() + "/" + std::to_string(prefix_len_);
}

namespace {

// 128-bit big-endian increment/compare helpers over the 16-byte storage.
bool bytes_le(const std::array<uint8_t, 16>& a, const std::array<uint8_t, 16>& b,
              size_t n) {
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return true;
}

bool add_block(std::array<uint8_t, 16>& a, size_t n, int prefix_len, int width) {
    // a += 2^(width - prefix_len); returns false on overflow past the family width.
    int host_bits = width - prefix_len;
    int byte_idx = static_cast<int>(n) - 1 - host_bits / 8;
    uint16_t carry = static_cast<uint16_t>(1u << (host_bits % 8));
    for (int i = byte_idx; i >= 0 && carry; --i) {
        uint16_t v = static_cast<uint16_t>(a[static_cast<size_t>(i)] + carry);
        a[static_cast<size_t>(i)] = static_cast<uint8_t>(v & 0xff);
        carry = v >> 8;
    }
    return carry == 0;
}

int trailing_zero_bits(const std::array<uint8_t, 16>& a, size_t /*n*/, int width) {
    for (int i = width - 1; i >= 0; --i) {
        size_t byte = static_cast<size_t>(i) / 8;
        if ((a[byte] >> (7 - static_cast<size_t>(i) % 8)) & 1) return width - 1 - i;
    }
    return width;
}

}  // namespace

std::vector<Cidr> range_to_cidrs(const IpAddress& first, const IpAddress& last) {
    std::vector<Cidr> out;
    if (first.family() != last.family()) return out;
    size_t n = first.byte_count();
    int width = bit_width(first);
    std::array<uint8_t, 16> cur = first.bytes();
    const std::array<uint8_t, 16>& end = last.bytes();
    if (!bytes_le(cur, end, n)) return out;

    while (true) {
        // Largest aligned block starting at cur that does not pass end.
        int max_align = trailing_zero_bits(cur, n, width);
        int len = width - max_align;
        while (len < width) {
            std::array<uint8_t, 16> probe = cur;
            if (add_block(probe, n, len, width)) {
                // block end = probe - 1; block fits iff probe - 1 <= end, i.e. probe <= end+1
                std::array<uint8_t, 16> block_last = probe;
                // decrement by one
                for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
                    if (block_last[static_cast<size_t>(i)]-- != 0) break;
                }
                if (bytes_le(block_last, end, n)) break;
            }
            ++len;
        }
        auto base = first.family() == IpAddress::Family::v4
                        ? IpAddress::from_v4_bytes({cur[0], cur[1], cur[2], cur[3]})
                        : IpAddress::from_v6_bytes(cur);
        out.emplace_back(base, len);
        if (!add_block(cur, n, len, width)) break;      // wrapped past the top
        if (!bytes_le(cur, end, n)) break;              // past the range end
    }
    return out;
}

std::optional<Cidr> covering_block(const IpAddress& first, const IpAddress& last,
                                   const IpAddress& ip) {
    for (const auto& c : range_to_cidrs(first, last))
        if (c.contains(ip)) return c;
    return std::nullopt;
}

}  // namespace hostprobe
