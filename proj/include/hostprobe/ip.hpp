#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hostprobe {

// IPv4 or IPv6 address. v4 uses the first 4 bytes of the array.
class IpAddress {
public:
    enum class Family { v4, v6 };

    IpAddress() = default;

    static std::optional<IpAddress> parse(const std::string& text);
    static IpAddress from_v4_bytes(const std::array<uint8_t, 4>& b);
    static IpAddress from_v6_bytes(const std::array<uint8_t, 16>& b);

    Family family() const { return family_; }
    // 4 for v4, 16 for v6
    size_t byte_count() const { return family_ == Family::v4 ? 4 : 16; }
    const std::array<uint8_t, 16>& bytes() const { return bytes_; }

    std::string to_string() const;

    bool is_loopback() const;
    bool is_private() const;
    bool is_link_local() const;
    bool is_multicast() const;
    bool is_unspecified() const;
    // Addresses for which an RDAP query makes no sense.
    bool is_global_unicast() const;

    bool operator==(const IpAddress& o) const {
        return family_ == o.family_ && bytes_ == o.bytes_;
    }
    bool operator<(const IpAddress& o) const {
        if (family_ != o.family_) return family_ == Family::v4;
        return bytes_ < o.bytes_;
    }

    int bit(size_t i) const;  // i-th bit, MSB first, over byte_count() bytes

private:
    Family family_ = Family::v4;
    std::array<uint8_t, 16> bytes_{};
};

// CIDR block. prefix_len is over 32 bits for v4, 128 for v6.
class Cidr {
public:
    Cidr() = default;
    Cidr(IpAddress base, int prefix_len);

    static std::optional<Cidr> parse(const std::string& text);

    const IpAddress& base() const { return base_; }
    int prefix_len() const { return prefix_len_; }

    bool contains(const IpAddress& ip) const;
    std::string to_string() const;

    bool operator==(const Cidr& o) const {
        return prefix_len_ == o.prefix_len_ && base_ == o.base_;
    }

private:
    IpAddress base_;
    int prefix_len_ = 0;
};

// Decompose an inclusive address range into maximal CIDR blocks.
// first and last must share the same family, first <= last.
std::vector<Cidr> range_to_cidrs(const IpAddress& first, const IpAddress& last);

// The block of range_to_cidrs(first, last) that contains ip, if any.
std::optional<Cidr> covering_block(const IpAddress& first, const IpAddress& last,
                                   const IpAddress& ip);

}  // namespace hostprobe
