#!/usr/bin/env python3
"""Deterministic stand-in for a chat-completion endpoint.

Answers refinement prompts by keeping regex expansions and filling context
entries from a fixed glossary; answers discovery prompts by looking up every
glossary acronym that appears in the passage. Used to record replay fixtures:

    python3 tools/mock_llm_server.py --port 8808 &
    OPENAI_API_KEY=dummy acrox --mode combined --input data/corpus/*.txt \
        --out /tmp/r.json --endpoint http://127.0.0.1:8808/v1/chat/completions \
        --fixture data/fixtures/corpus.jsonl --record
"""

import argparse
import json
import re
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

GLOSSARY = {
    "BERT": "Bidirectional Encoder Representations from Transformers",
    "BET": "Brunauer-Emmett-Teller",
    "BWA": "Burrows-Wheeler Aligner",
    "CNV": "Copy Number Variation",
    "CRF": "Conditional Random Field",
    "DFT": "Density Functional Theory",
    "DNA": "Deoxyribonucleic Acid",
    "ENA": "European Nucleotide Archive",
    "FDR": "False Discovery Rate",
    "GATK": "Genome Analysis Toolkit",
    "GC-MS": "Gas Chromatography Mass Spectrometry",
    "GPU": "Graphics Processing Unit",
    "HMM": "Hidden Markov Model",
    "KB": "Knowledge Base",
    "LSTM": "Long Short-Term Memory",
    "MAPQ": "Mapping Quality",
    "MBE": "Molecular Beam Epitaxy",
    "MCMC": "Markov Chain Monte Carlo",
    "MD": "Molecular Dynamics",
    "MODIS": "Moderate Resolution Imaging Spectroradiometer",
    "MOF": "Metal-Organic Framework",
    "NDVI": "Normalized Difference Vegetation Index",
    "NER": "Named Entity Recognition",
    "NGS": "Next-Generation Sequencing",
    "NSF": "National Science Foundation",
    "ORNL": "Oak Ridge National Laboratory",
    "SGD": "Stochastic Gradient Descent",
    "SNP": "Single Nucleotide Polymorphism",
    "TDTR": "Time-Domain Thermoreflectance",
    "TEM": "Transmission Electron Microscopy",
    "TOF": "Turnover Frequency",
    "USGS": "United States Geological Survey",
    "WGS": "Whole Genome Sequencing",
    "XPS": "X-ray Photoelectron Spectroscopy",
}

REFINE_HEAD = "refining a dictionary of acronyms"
TAIL = "\n\nPlease follow these instructions carefully:"


def body_of(prompt: str) -> str:
    start = prompt.index(":\n") + 2
    return prompt[start:prompt.index(TAIL)]


def refine(prompt: str) -> dict:
    entries = json.loads(body_of(prompt))
    out = {}
    for key, value in entries.items():
        if not value.startswith("(context)"):
            out[key] = value.split("; ")[0]
        elif key in GLOSSARY:
            out[key] = GLOSSARY[key]
    return out


def discover(prompt: str) -> dict:
    passage = body_of(prompt)
    out = {}
    for key, value in GLOSSARY.items():
        if re.search(r"(?<![A-Za-z0-9])" + re.escape(key) + r"s?(?![A-Za-z0-9])", passage):
            out[key] = value
    return out


class Handler(BaseHTTPRequestHandler):
    def do_POST(self):
        length = int(self.headers.get("Content-Length", "0"))
        request = json.loads(self.rfile.read(length))
        prompt = request["messages"][0]["content"]
        answer = refine(prompt) if REFINE_HEAD in prompt else discover(prompt)
        content = "```json\n" + json.dumps(answer, indent=4) + "\n```"
        payload = json.dumps({
            "model": request.get("model", "mock"),
            "choices": [{"index": 0, "message": {"role": "assistant", "content": content}}],
        }).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)

    def log_message(self, *args):
        pass


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--port", type=int, default=8808)
    args = parser.parse_args()
    ThreadingHTTPServer(("127.0.0.1", args.port), Handler).serve_forever()


if __name__ == "__main__":
    main()
