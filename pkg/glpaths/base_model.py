from collections import OrderedDict


class GlpObject(object):
    op_type = "<not-set>"  # name used in serialized output

    @property
    def type(self):
        return self.op_type

    def to_dict(self, export_none=False):
        outputs = OrderedDict()
        outputs["type"] = self.op_type
        for item in self.__dict__:
            if '_' == item[0]:  # do not export private variables
                continue
            value = self.__getattribute__(item)
            if not export_none and value is None:
                continue
            outputs[item] = collect_serial_value(value)
        return outputs


def collect_serial_value(value):
    if isinstance(value, (str, bool, int, float)) or value is None:
        return value
    elif hasattr(value, "to_text"):  # group elements
        return value.to_text()
    elif hasattr(value, "to_dict"):
        return value.to_dict()
    elif isinstance(value, dict):
        return OrderedDict((str(k), collect_serial_value(v)) for k, v in value.items())
    elif isinstance(value, (set, frozenset)):
        return [collect_serial_value(item) for item in sorted(value, key=str)]
    elif hasattr(value, "__len__"):
        tolist = getattr(value, "tolist", None)
        if callable(tolist):
            return value.tolist()
        return [collect_serial_value(item) for item in value]
    return value
