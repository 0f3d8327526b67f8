#include "impnoise/audio_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace impnoise {

namespace {

constexpr std::uint16_t kTagPcm = 1;
constexpr std::uint16_t kTagFloat = 3;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(v & 0xff);
    out.push_back(v >> 8);
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(v & 0xff);
    out.push_back((v >> 8) & 0xff);
    out.push_back((v >> 16) & 0xff);
    out.push_back((v >> 24) & 0xff);
}

struct Reader {
    const std::uint8_t* p;
    std::size_t len;
    std::size_t pos = 0;

    bool has(std::size_t n) const { return pos + n <= len; }

    std::uint16_t u16() {
        std::uint16_t v = static_cast<std::uint16_t>(p[pos] | (p[pos + 1] << 8));
        pos += 2;
        return v;
    }
    std::uint32_t u32() {
        std::uint32_t v = p[pos] | (p[pos + 1] << 8) |
                          (p[pos + 2] << 16) |
                          (static_cast<std::uint32_t>(p[pos + 3]) << 24);
        pos += 4;
        return v;
    }
};

} // namespace

WavFile read_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());

    if (data.size() < 12 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
        std::memcmp(data.data() + 8, "WAVE", 4) != 0)
        throw std::runtime_error("not a WAV file");

    Reader r{data.data(), data.size(), 12};
    bool have_fmt = false;
    std::uint16_t tag = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    const std::uint8_t* payload = nullptr;
    std::uint32_t payload_len = 0;

    while (r.has(8)) {
        char id[5] = {0};
        std::memcpy(id, r.p + r.pos, 4);
        r.pos += 4;
        const std::uint32_t size = r.u32();
        if (std::strcmp(id, "fmt ") == 0) {
            if (size < 16 || !r.has(size)) throw std::runtime_error("corrupt file");
            Reader f{r.p, r.pos + size, r.pos};
            tag = f.u16();
            channels = f.u16();
            rate = f.u32();
            f.u32(); // byte rate
            f.u16(); // block align
            bits = f.u16();
            have_fmt = true;
        } else if (std::strcmp(id, "data") == 0) {
            if (!r.has(size)) throw std::runtime_error("corrupt file");
            payload = r.p + r.pos;
            payload_len = size;
        }
        r.pos += size + (size & 1); // chunks are word-aligned
    }
    if (!have_fmt || payload == nullptr)
        throw std::runtime_error("corrupt file");
    if (channels != 1)
        throw std::runtime_error("unsupported encoding");

    WavFile wav;
    wav.signal.sample_rate = rate;
    if (tag == kTagPcm && bits == 16) {
        wav.format = WavFormat::pcm16;
        const std::size_t n = payload_len / 2;
        wav.signal.samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::int16_t s = static_cast<std::int16_t>(
                payload[2 * i] | (payload[2 * i + 1] << 8));
            wav.signal.samples[i] = static_cast<double>(s) / 32768.0;
        }
    } else if (tag == kTagFloat && bits == 32) {
        wav.format = WavFormat::float32;
        const std::size_t n = payload_len / 4;
        wav.signal.samples.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t u = payload[4 * i] | (payload[4 * i + 1] << 8) |
                              (payload[4 * i + 2] << 16) |
                              (static_cast<std::uint32_t>(payload[4 * i + 3]) << 24);
            float f;
            std::memcpy(&f, &u, 4);
            wav.signal.samples[i] = f;
        }
    } else {
        throw std::runtime_error("unsupported encoding");
    }
    return wav;
}

void write_wav(const std::string& path, const WavFile& wav) {
    wav.signal.validate();

    const std::size_t n = wav.signal.size();
    const bool pcm = wav.format == WavFormat::pcm16;
    const std::uint16_t bits = pcm ? 16 : 32;
    const std::uint32_t rate = static_cast<std::uint32_t>(wav.signal.sample_rate);
    const std::uint32_t data_len =
        static_cast<std::uint32_t>(n * (pcm ? 2 : 4));

    std::vector<std::uint8_t> out;
    out.reserve(44 + data_len);
    out.insert(out.end(), {'R', 'I', 'F', 'F'});
    put_u32(out, 36 + data_len);
    out.insert(out.end(), {'W', 'A', 'V', 'E'});
    out.insert(out.end(), {'f', 'm', 't', ' '});
    put_u32(out, 16);
    put_u16(out, pcm ? kTagPcm : kTagFloat);
    put_u16(out, 1); // mono
    put_u32(out, rate);
    put_u32(out, rate * (bits / 8));
    put_u16(out, bits / 8);
    put_u16(out, bits);
    out.insert(out.end(), {'d', 'a', 't', 'a'});
    put_u32(out, data_len);

    if (pcm) {
        for (double s : wav.signal.samples) {
            double clamped = std::min(std::max(s, -1.0), 1.0 - 1.0 / 32768.0);
            const long q = std::lround(clamped * 32768.0);
            const std::int16_t v = static_cast<std::int16_t>(
                std::min<long>(std::max<long>(q, -32768), 32767));
            put_u16(out, static_cast<std::uint16_t>(v));
        }
    } else {
        for (double s : wav.signal.samples) {
            const float f = static_cast<float>(s);
            std::uint32_t u;
            std::memcpy(&u, &f, 4);
            put_u32(out, u);
        }
    }

    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    file.write(reinterpret_cast<const char*>(out.data()),
               static_cast<std::streamsize>(out.size()));
    if (!file) throw std::runtime_error("cannot write " + path);
}

} // namespace impnoise
