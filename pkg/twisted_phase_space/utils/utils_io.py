import json
import os
import sys


def make_dir(dirs, check=True):
    if isinstance(dirs, str):
        dirs = [dirs]
    for d in dirs:
        if check and os.path.isdir(d):
            continue
        os.makedirs(d, exist_ok=True)


def save_json_obj(obj, name):
    make_dir(os.path.dirname(name) or '.')
    with open(name + '.json', 'w') as fp:
        json.dump(obj, fp, sort_keys=True, indent=2)


def load_json_obj(name):
    if not name.endswith('.json'):
        name += '.json'
    with open(name, 'r') as fp:
        return json.load(fp)


def write_output(text, out=None, stream=None):
    """Write the rendered artifact to `out`, or to stdout."""
    if out:
        make_dir(os.path.dirname(out) or '.')
        with open(out, 'w') as fp:
            fp.write(text)
    else:
        (stream or sys.stdout).write(text)
