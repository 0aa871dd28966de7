import json

from cli.services.base import PresentationCommand
from modact.services.actions import ActionKind, act
from presentation.services.elaborate import parse_expression


class Command(PresentationCommand):
    help = 'Apply a regular or coregular action: prints the canonical image of F under H'

    def add_command_arguments(self, parser):
        parser.add_argument('h', help='Acting element')
        parser.add_argument('f', help='Element acted upon')
        parser.add_argument(
            '--kind',
            default=ActionKind.LEFT_COREGULAR.value,
            choices=[kind.value for kind in ActionKind],
            help='Action kind',
        )

    def run(self, triplet, config, **options):
        kind = ActionKind.parse(options['kind'])
        h = parse_expression(options['h'], triplet)
        f = parse_expression(options['f'], triplet)
        image = act(kind, h, f)
        if config.is_json:
            self.stdout.write(json.dumps({'kind': kind.value, 'image': image.render()}))
        else:
            self.stdout.write(image.render())
