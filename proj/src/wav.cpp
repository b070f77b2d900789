#include "conal/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace conal {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void push_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xff));
}

void push_u16(std::vector<unsigned char>& out, std::uint16_t v) {
    out.push_back(static_cast<unsigned char>(v & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

}  // namespace

AudioSignal read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("read_wav: cannot open " + path);
    std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (data.size() < 44 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
        std::memcmp(data.data() + 8, "WAVE", 4) != 0) {
        throw InvalidInputError("read_wav: not a RIFF/WAVE file: " + path);
    }
    int channels = 0, bits = 0;
    double rate = 0.0;
    std::size_t data_off = 0, data_len = 0;
    std::size_t pos = 12;
    while (pos + 8 <= data.size()) {
        std::uint32_t len = read_u32(data.data() + pos + 4);
        if (std::memcmp(data.data() + pos, "fmt ", 4) == 0 && pos + 8 + 16 <= data.size()) {
            std::uint16_t format = read_u16(data.data() + pos + 8);
            if (format != 1) throw InvalidInputError("read_wav: only PCM supported");
            channels = read_u16(data.data() + pos + 10);
            rate = read_u32(data.data() + pos + 12);
            bits = read_u16(data.data() + pos + 22);
        } else if (std::memcmp(data.data() + pos, "data", 4) == 0) {
            data_off = pos + 8;
            data_len = std::min<std::size_t>(len, data.size() - data_off);
        }
        pos += 8 + len + (len % 2);
    }
    if (channels < 1 || bits != 16 || rate <= 0.0 || data_off == 0) {
        throw InvalidInputError("read_wav: need 16-bit PCM with a data chunk");
    }
    AudioSignal out;
    out.sample_rate = rate;
    std::size_t n = data_len / (2 * static_cast<std::size_t>(channels));
    out.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int ch = 0; ch < channels; ++ch) {
            const unsigned char* p = data.data() + data_off + 2 * (i * channels + ch);
            auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
            acc += v / 32768.0;
        }
        out.samples.push_back(acc / channels);
    }
    return out;
}

void write_wav(const std::string& path, const AudioSignal& audio) {
    if (!(audio.sample_rate > 0.0)) throw InvalidInputError("write_wav: bad sample rate");
    std::vector<unsigned char> out;
    auto n = static_cast<std::uint32_t>(audio.samples.size());
    auto rate = static_cast<std::uint32_t>(std::lround(audio.sample_rate));
    out.insert(out.end(), {'R', 'I', 'F', 'F'});
    push_u32(out, 36 + 2 * n);
    out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
    push_u32(out, 16);
    push_u16(out, 1);  // PCM
    push_u16(out, 1);  // mono
    push_u32(out, rate);
    push_u32(out, rate * 2);
    push_u16(out, 2);
    push_u16(out, 16);
    out.insert(out.end(), {'d', 'a', 't', 'a'});
    push_u32(out, 2 * n);
    for (double s : audio.samples) {
        double clamped = std::clamp(s, -1.0, 32767.0 / 32768.0);
        auto v = static_cast<std::int16_t>(std::lround(clamped * 32768.0));
        push_u16(out, static_cast<std::uint16_t>(v));
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInputError("write_wav: cannot open " + path);
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
}

}  // namespace conal
